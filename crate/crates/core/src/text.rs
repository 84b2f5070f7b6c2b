//! Text form of monomials and ideals: `x<i>^<e>` factors joined by `*`,
//! `^1` optional, `1` for the empty monomial, variables counted from 1.
//! Ideals are comma- or newline-separated monomials; `0` is the zero ideal.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

struct Cursor<'a> {
    text: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    fn fail<T>(&self, reason: &'static str) -> Result<T> {
        Err(Error::Parse {
            offset: self.pos,
            reason,
        })
    }

    fn skip_blanks(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\r')) {
            self.pos += 1;
        }
    }

    fn number(&mut self) -> Result<u32> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            self.pos = start;
            return self.fail("expected a number");
        }
        let digits = core::str::from_utf8(&self.text[start..self.pos]).expect("ascii digits");
        digits.parse().map_err(|_| Error::Parse {
            offset: start,
            reason: "number too large",
        })
    }

    /// One monomial as `(variable index from 0, exponent, offset)` factors.
    fn monomial(&mut self) -> Result<Vec<(usize, u32, usize)>> {
        self.skip_blanks();
        if self.peek() == Some(b'1') {
            self.pos += 1;
            return Ok(Vec::new());
        }
        let mut factors = Vec::new();
        loop {
            self.skip_blanks();
            let at = self.pos;
            if self.peek() != Some(b'x') {
                return self.fail("expected 'x' or '1'");
            }
            self.pos += 1;
            let var = self.number()?;
            if var == 0 {
                return Err(Error::Parse {
                    offset: at + 1,
                    reason: "variables are numbered from 1",
                });
            }
            let mut exp = 1;
            if self.peek() == Some(b'^') {
                self.pos += 1;
                exp = self.number()?;
            }
            factors.push((var as usize - 1, exp, at));
            self.skip_blanks();
            if self.peek() != Some(b'*') {
                return Ok(factors);
            }
            self.pos += 1;
        }
    }
}

fn build(factors: &[(usize, u32, usize)], n: usize) -> Result<Monomial> {
    let mut e = alloc::vec![0u32; n];
    for &(i, x, at) in factors {
        if i >= n {
            return Err(Error::Parse {
                offset: at,
                reason: "variable index exceeds the variable count",
            });
        }
        e[i] = e[i].checked_add(x).ok_or(Error::Parse {
            offset: at,
            reason: "exponent overflow",
        })?;
    }
    Ok(Monomial::new(e))
}

fn max_var(list: &[Vec<(usize, u32, usize)>]) -> usize {
    list.iter()
        .flatten()
        .map(|&(i, _, _)| i + 1)
        .max()
        .unwrap_or(0)
}

/// Parses one monomial; `n` defaults to the largest variable index used.
pub fn parse_monomial(text: &str, n: Option<usize>) -> Result<Monomial> {
    let mut c = Cursor {
        text: text.as_bytes(),
        pos: 0,
    };
    let factors = c.monomial()?;
    c.skip_blanks();
    if c.peek().is_some() {
        return c.fail("unexpected trailing input");
    }
    build(
        &factors,
        n.unwrap_or_else(|| max_var(core::slice::from_ref(&factors))),
    )
}

/// Parses an ideal; `n` defaults to the largest variable index used.
pub fn parse_ideal(text: &str, n: Option<usize>) -> Result<MonomialIdeal> {
    let mut c = Cursor {
        text: text.as_bytes(),
        pos: 0,
    };
    let skip_space = |c: &mut Cursor| {
        while matches!(c.peek(), Some(b' ' | b'\t' | b'\r' | b'\n')) {
            c.pos += 1;
        }
    };
    skip_space(&mut c);
    let rest = text[c.pos..].trim_end();
    if rest.is_empty() || rest == "0" {
        return Ok(MonomialIdeal::zero(n.unwrap_or(0)));
    }
    let mut list = Vec::new();
    loop {
        list.push(c.monomial()?);
        c.skip_blanks();
        match c.peek() {
            None => break,
            Some(b',' | b'\n') => {
                c.pos += 1;
                skip_space(&mut c);
                if c.peek().is_none() {
                    break;
                }
            }
            Some(_) => return c.fail("expected ',' or a newline"),
        }
    }
    let n = n.unwrap_or_else(|| max_var(&list));
    let gens = list
        .iter()
        .map(|f| build(f, n))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(n, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn monomial_forms() {
        assert_eq!(
            parse_monomial("x1^2*x3", None).unwrap(),
            Monomial::new(vec![2, 0, 1])
        );
        assert_eq!(
            parse_monomial("x1^2*x3", Some(4)).unwrap(),
            Monomial::new(vec![2, 0, 1, 0])
        );
        assert_eq!(parse_monomial("1", Some(2)).unwrap(), Monomial::one(2));
        assert_eq!(
            parse_monomial("x2 * x2", None).unwrap(),
            Monomial::new(vec![0, 2])
        );
        assert_eq!(Monomial::new(vec![2, 0, 1]).to_string(), "x1^2*x3");
    }

    #[test]
    fn errors_name_offsets() {
        assert_eq!(
            parse_monomial("x1*y2", None),
            Err(Error::Parse {
                offset: 3,
                reason: "expected 'x' or '1'"
            })
        );
        assert_eq!(
            parse_monomial("x0", None),
            Err(Error::Parse {
                offset: 1,
                reason: "variables are numbered from 1"
            })
        );
        assert!(matches!(
            parse_monomial("x1^", None),
            Err(Error::Parse { offset: 3, .. })
        ));
        assert!(matches!(
            parse_monomial("x3", Some(2)),
            Err(Error::Parse { offset: 0, .. })
        ));
        assert!(matches!(
            parse_ideal("x1, x2 x3", None),
            Err(Error::Parse { offset: 7, .. })
        ));
    }

    #[test]
    fn ideals_round_trip() {
        let i = parse_ideal("x1^2, x1*x2\nx2^3", None).unwrap();
        assert_eq!(i.mu(), 3);
        assert_eq!(parse_ideal(&i.to_string(), Some(2)).unwrap(), i);
        assert!(parse_ideal("0", Some(3)).unwrap().is_zero());
        assert!(parse_ideal("1", Some(3)).unwrap().is_unit());
        assert_eq!(
            parse_ideal("x1,\n", None).unwrap(),
            MonomialIdeal::maximal(1)
        );
    }
}
