use super::linalg::rank_in_place;
use super::poly::Polynomial;
use super::prime::{format_point, SmallPrime};
use crate::error::{Error, Result};

/// A polynomial with coefficients reduced mod p, laid out for fast evaluation.
#[derive(Clone, Debug)]
pub struct ModPoly {
    p: SmallPrime,
    arity: usize,
    terms: Vec<(u64, Vec<(usize, u32)>)>,
}

impl ModPoly {
    pub fn new(f: &Polynomial, p: SmallPrime) -> Self {
        let terms = f
            .terms()
            .filter_map(|(m, c)| {
                let c = p.reduce_bigint(c);
                (c != 0).then(|| {
                    let factors =
                        m.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (i, e)).collect();
                    (c, factors)
                })
            })
            .collect();
        ModPoly { p, arity: f.arity(), terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    #[inline]
    pub fn eval(&self, pt: &[u64]) -> u64 {
        let p = self.p;
        let mut acc = 0;
        for (c, factors) in &self.terms {
            let mut t = *c;
            for &(i, e) in factors {
                let x = pt[i];
                if x == 0 {
                    t = 0;
                    break;
                }
                for _ in 0..e {
                    t = p.mul(t, x);
                }
            }
            acc = p.add(acc, t);
        }
        acc
    }
}

/// Generators together with their gradients, reduced mod p.
#[derive(Clone, Debug)]
pub struct ModSystem {
    pub p: SmallPrime,
    pub arity: usize,
    gens: Vec<ModPoly>,
    grads: Vec<Vec<ModPoly>>,
}

impl ModSystem {
    pub fn new(fs: &[Polynomial], p: SmallPrime, arity: usize) -> Self {
        let gens = fs.iter().map(|f| ModPoly::new(f, p)).collect();
        let grads = fs
            .iter()
            .map(|f| (0..f.arity()).map(|i| ModPoly::new(&f.partial(i), p)).collect())
            .collect();
        ModSystem { p, arity, gens, grads }
    }

    #[inline]
    pub fn vanishes(&self, pt: &[u64]) -> bool {
        self.gens.iter().all(|g| g.eval(pt) == 0)
    }

    pub fn jacobian(&self, pt: &[u64]) -> Vec<Vec<u64>> {
        self.grads.iter().map(|row| row.iter().map(|d| d.eval(pt)).collect()).collect()
    }

    /// Rank of the Jacobian at a point already known to lie on the variety.
    pub fn jacobian_rank_unchecked(&self, pt: &[u64]) -> usize {
        let mut j = self.jacobian(pt);
        rank_in_place(&mut j, self.p)
    }

    pub fn jacobian_rank(&self, pt: &[u64]) -> Result<usize> {
        if pt.len() != self.arity {
            return Err(Error::Arity { expected: self.arity, got: pt.len() });
        }
        if !self.vanishes(pt) {
            return Err(Error::PointOffVariety(format_point(pt)));
        }
        Ok(self.jacobian_rank_unchecked(pt))
    }
}

/// Rank over F_p of the matrix of partials of `fs` at `pt`; `pt` must be a common zero.
pub fn jacobian_rank(fs: &[Polynomial], pt: &[u64], p: SmallPrime) -> Result<usize> {
    let arity = fs.first().map_or(pt.len(), |f| f.arity());
    ModSystem::new(fs, p, arity).jacobian_rank(pt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, poly::ring};

    #[test]
    fn single_bilinear_form() {
        let r = ring(&["y1", "y2", "y3", "x1", "x2", "x3"]);
        let f = parse_poly("y1*x1 + y2*x2 + y3*x3", &r).unwrap();
        for p in [2, 3, 7] {
            let p = SmallPrime::new(p).unwrap();
            assert_eq!(jacobian_rank(std::slice::from_ref(&f), &[1, 0, 0, 0, 0, 0], p).unwrap(), 1);
        }
    }

    #[test]
    fn off_variety_is_an_error() {
        let r = ring(&["x", "y"]);
        let f = parse_poly("x*y", &r).unwrap();
        let p = SmallPrime::new(3).unwrap();
        assert!(matches!(jacobian_rank(&[f], &[1, 1], p), Err(Error::PointOffVariety(_))));
    }

    #[test]
    fn compiled_matches_symbolic_eval() {
        let r = ring(&["a", "b", "c"]);
        let f = parse_poly("5*a^3*b - 7*b*c^2 + 11*c - 4", &r).unwrap();
        let p = SmallPrime::new(13).unwrap();
        let m = ModPoly::new(&f, p);
        for a in 0..13 {
            for b in [0, 3, 12] {
                let pt = [a, b, (a * 7 + b) % 13];
                assert_eq!(m.eval(&pt), f.eval(&pt, p).unwrap());
            }
        }
    }
}
