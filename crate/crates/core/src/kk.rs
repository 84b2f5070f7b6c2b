//! Face vectors of simplicial complexes, the Kruskal-Katona test and the
//! dictionary with ideals containing the squares of the variables.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::degree_sequence::DegreeSequence;
use crate::error::{Error, Result};
use crate::ideal::{HilbertFunction, MonomialIdeal};
use crate::macaulay::{classical_growth, realize_hf};
use crate::monomial::Monomial;

/// Largest vertex count for which faces are enumerated as subsets.
pub const MAX_VERTICES: usize = 24;

/// Face counts `(f_0, ..., f_{r-1})`; `f_i` counts faces with `i + 1`
/// vertices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FVector(Vec<u64>);

impl FVector {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.first().is_some_and(|&f0| f0 == 0) {
            return Err(Error::OutOfRange {
                what: "f_0",
                value: 0,
                min: 1,
                max: u64::MAX,
            });
        }
        Ok(FVector(entries))
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The Hilbert function `(1, f_0, f_1, ...)` of the matching quotient.
    pub fn hilbert_function(&self) -> HilbertFunction {
        let mut v = alloc::vec![1];
        v.extend_from_slice(&self.0);
        HilbertFunction::new(v).expect("starts at 1")
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// First index `d + 1` with `f_{d+1} > f_d^(d+1)`, if any.
pub fn kk_violation(f: &FVector) -> Option<usize> {
    f.0.windows(2)
        .enumerate()
        .find(|(d, w)| w[1] > classical_growth(w[0], *d as u32 + 1))
        .map(|(d, _)| d + 1)
}

pub fn kk_valid(f: &FVector) -> bool {
    kk_violation(f).is_none()
}

/// A complex on vertices `1..=n`, stored by its facets as bitmasks
/// (bit `i - 1` for vertex `i`). No facets means the void complex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<u32>,
}

fn maximal(mut sets: Vec<u32>) -> Vec<u32> {
    sets.sort_unstable_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
    sets.dedup();
    let mut out: Vec<u32> = Vec::new();
    for s in sets {
        if !out.iter().any(|&t| s & t == s) {
            out.push(s);
        }
    }
    out.sort_unstable();
    out
}

impl SimplicialComplex {
    /// Facets as lists of 1-based vertices; duplicates and non-maximal
    /// sets are dropped.
    pub fn new(n: usize, facets: &[Vec<usize>]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::OutOfRange {
                what: "vertex count",
                value: n as u64,
                min: 0,
                max: MAX_VERTICES as u64,
            });
        }
        let mut masks = Vec::with_capacity(facets.len());
        for facet in facets {
            let mut m = 0u32;
            for &v in facet {
                if v == 0 || v > n {
                    return Err(Error::OutOfRange {
                        what: "vertex",
                        value: v as u64,
                        min: 1,
                        max: n as u64,
                    });
                }
                m |= 1 << (v - 1);
            }
            masks.push(m);
        }
        Ok(SimplicialComplex {
            n,
            facets: maximal(masks),
        })
    }

    /// The full simplex on `n` vertices.
    pub fn simplex(n: usize) -> Result<Self> {
        Self::new(n, &[(1..=n).collect()])
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    /// Facets as sorted 1-based vertex lists.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&m| vertices(m)).collect()
    }

    pub fn is_face(&self, mask: u32) -> bool {
        self.facets.iter().any(|&f| mask & f == mask)
    }

    /// Every face, including the empty face unless the complex is void.
    fn faces(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        for &f in &self.facets {
            let mut sub = f;
            loop {
                out.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        out
    }
}

fn vertices(mask: u32) -> Vec<usize> {
    (0..32)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| i + 1)
        .collect()
}

fn squarefree(n: usize, mask: u32) -> Monomial {
    Monomial::new((0..n).map(|i| mask >> i & 1).collect())
}

/// Face counts by size, without the empty face.
pub fn complex_to_fvector(complex: &SimplicialComplex) -> FVector {
    let mut f: Vec<u64> = Vec::new();
    for face in complex.faces() {
        let k = face.count_ones() as usize;
        if k == 0 {
            continue;
        }
        if f.len() < k {
            f.resize(k, 0);
        }
        f[k - 1] += 1;
    }
    FVector(f)
}

/// The ideal of minimal non-faces.
pub fn stanley_reisner(complex: &SimplicialComplex) -> MonomialIdeal {
    let n = complex.n;
    let faces = complex.faces();
    let mut gens = BTreeSet::new();
    if faces.is_empty() {
        return MonomialIdeal::unit(n);
    }
    for &face in &faces {
        for v in 0..n {
            let s = face | 1 << v;
            if s != face
                && !faces.contains(&s)
                && vertices(s)
                    .iter()
                    .all(|&u| faces.contains(&(s & !(1 << (u - 1)))))
            {
                gens.insert(s);
            }
        }
    }
    MonomialIdeal::new(n, gens.into_iter().map(|s| squarefree(n, s)).collect())
        .expect("squarefree generators")
}

/// The complex whose faces are the squarefree monomials outside `ideal`.
pub fn complex_of(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let n = ideal.nvars();
    if n > MAX_VERTICES {
        return Err(Error::OutOfRange {
            what: "vertex count",
            value: n as u64,
            min: 0,
            max: MAX_VERTICES as u64,
        });
    }
    let gens: Vec<u32> = ideal
        .generators()
        .iter()
        .map(|g| {
            (0..n)
                .filter(|&i| g.exponent(i) > 0)
                .fold(0u32, |m, i| m | 1 << i)
        })
        .collect();
    let faces: Vec<u32> = (0u32..1 << n)
        .filter(|&s| gens.iter().all(|&g| g & !s != 0))
        .collect();
    Ok(SimplicialComplex {
        n,
        facets: maximal(faces),
    })
}

/// Face counts read off the Hilbert function of
/// `A / (J + (x_1^2, ..., x_n^2))`.
pub fn fvector_via_hilbert(complex: &SimplicialComplex) -> FVector {
    let n = complex.n;
    let squares = DegreeSequence::uniform(2, n).expect("valid").ideal();
    let ideal = stanley_reisner(complex).sum(&squares).expect("same ring");
    let h = ideal.hilbert_function(n as u32 + 1);
    let mut f: Vec<u64> = h.values().iter().skip(1).copied().collect();
    while f.last() == Some(&0) {
        f.pop();
    }
    FVector(f)
}

/// A complex with face vector `f`, from the lex-plus-squares ideal with
/// Hilbert function `(1, f)` with its squares removed.
pub fn realize_fvector(f: &FVector) -> Result<SimplicialComplex> {
    if let Some(d) = kk_violation(f) {
        return Err(Error::Inadmissible { degree: d });
    }
    let n =
        *f.0.first()
            .ok_or(Error::Precondition("empty face vector"))? as usize;
    let seq = DegreeSequence::uniform(2, n)?;
    let lpp = realize_hf(&f.hilbert_function(), &seq)?;
    let gens: Vec<Monomial> = lpp
        .generators()
        .iter()
        .filter(|g| !seq.contains(g))
        .cloned()
        .collect();
    let complex = complex_of(&MonomialIdeal::new(n, gens)?)?;
    if &complex_to_fvector(&complex) != f {
        return Err(Error::Internal(alloc::format!(
            "realization of {f} has the wrong face counts"
        )));
    }
    Ok(complex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::macaulay::is_admissible_hf;
    use alloc::vec;

    fn fv(e: &[u64]) -> FVector {
        FVector::new(e.to_vec()).unwrap()
    }

    #[test]
    fn kk_examples() {
        assert!(kk_valid(&fv(&[4, 5, 2])));
        assert_eq!(kk_violation(&fv(&[4, 5, 3])), Some(2));
        assert!(kk_valid(&fv(&[3, 3, 1])));
        assert_eq!(kk_violation(&fv(&[3, 4])), Some(1));
        assert!(FVector::new(vec![0, 1]).is_err());
    }

    #[test]
    fn face_count_examples() {
        let glued = SimplicialComplex::new(4, &[vec![1, 3, 4], vec![2, 3, 4]]).unwrap();
        assert_eq!(complex_to_fvector(&glued), fv(&[4, 5, 2]));
        assert_eq!(fvector_via_hilbert(&glued), fv(&[4, 5, 2]));
        let point = SimplicialComplex::simplex(1).unwrap();
        assert_eq!(complex_to_fvector(&point), fv(&[1]));
        let tri = SimplicialComplex::simplex(3).unwrap();
        assert_eq!(complex_to_fvector(&tri), fv(&[3, 3, 1]));
        assert_eq!(fvector_via_hilbert(&tri), fv(&[3, 3, 1]));
    }

    #[test]
    fn stanley_reisner_examples() {
        let glued = SimplicialComplex::new(4, &[vec![1, 3, 4], vec![2, 3, 4], vec![3, 4]]).unwrap();
        assert_eq!(glued.facets(), vec![vec![1, 3, 4], vec![2, 3, 4]]);
        let j = stanley_reisner(&glued);
        assert_eq!(
            j,
            MonomialIdeal::new(4, vec![Monomial::new(vec![1, 1, 0, 0])]).unwrap()
        );
        assert_eq!(complex_of(&j).unwrap(), glued);
        assert!(stanley_reisner(&SimplicialComplex::simplex(3).unwrap()).is_zero());
        let sq = MonomialIdeal::new(2, vec![Monomial::new(vec![2, 0])]).unwrap();
        assert_eq!(complex_of(&sq), Err(Error::NotSquarefree));
        assert!(SimplicialComplex::new(3, &[vec![4]]).is_err());
    }

    #[test]
    fn realize_examples() {
        let c = realize_fvector(&fv(&[4, 5, 2])).unwrap();
        assert_eq!(c.facets(), vec![vec![1, 3, 4], vec![2, 3, 4]]);
        assert_eq!(
            stanley_reisner(&c),
            MonomialIdeal::new(4, vec![Monomial::new(vec![1, 1, 0, 0])]).unwrap()
        );
        assert_eq!(
            realize_fvector(&fv(&[4, 6, 4, 1])).unwrap(),
            SimplicialComplex::simplex(4).unwrap()
        );
        assert_eq!(
            complex_to_fvector(&realize_fvector(&fv(&[5, 7, 2])).unwrap()),
            fv(&[5, 7, 2])
        );
        assert_eq!(
            realize_fvector(&fv(&[4, 5, 3])),
            Err(Error::Inadmissible { degree: 2 })
        );
    }

    #[test]
    fn kk_matches_admissibility() {
        fn walk(prefix: &mut Vec<u64>, depth: usize, top: u64) {
            if !prefix.is_empty() {
                let f = FVector(prefix.clone());
                let seq = DegreeSequence::uniform(2, prefix[0] as usize).unwrap();
                assert_eq!(
                    kk_valid(&f),
                    is_admissible_hf(&f.hilbert_function(), &seq),
                    "{f}"
                );
            }
            if depth == 0 {
                return;
            }
            for x in 1..=top {
                prefix.push(x);
                walk(prefix, depth - 1, top);
                prefix.pop();
            }
        }
        walk(&mut Vec::new(), 3, 8);
    }

    #[test]
    fn all_complexes_on_four_vertices() {
        let n = 4;
        let subsets: Vec<Vec<usize>> = (1u32..1 << n).map(vertices).collect();
        for mask in 0u32..1 << subsets.len() {
            let facets: Vec<Vec<usize>> = (0..subsets.len())
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| subsets[b].clone())
                .collect();
            let c = SimplicialComplex::new(n, &facets).unwrap();
            assert_eq!(complex_of(&stanley_reisner(&c)).unwrap(), c);
            if !facets.is_empty() {
                assert_eq!(fvector_via_hilbert(&c), complex_to_fvector(&c));
                assert!(kk_valid(&complex_to_fvector(&c)));
            }
        }
    }
}
