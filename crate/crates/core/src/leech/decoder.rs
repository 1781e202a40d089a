//! Exact bounded-distance decoding of Λ through its coset structure.
//!
//! A point of Λ is fixed by its glue `m ∈ {0, ±1}`, a Golay word `c`, and
//! per-coordinate digits: `xᵢ = rᵢ + 3wᵢ` where `rᵢ ≡ m + θcᵢ (mod 3)` and
//! the only remaining condition is `Σ (wᵢ mod θ) ≡ -K (mod θ)` with
//! `3K = Σrᵢ + 3m`. Distances are therefore separable up to one `𝔽₃`-valued
//! sum, which a three-state dynamic program bounds exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::golay::GolayTernary;
use super::point::LeechPoint;
use crate::field::{CycloElem, EisensteinInt, Rational};

/// A target `num / den` with `num ∈ ℰ¹²` and `den > 0`.
#[derive(Clone, Debug)]
pub(crate) struct ScaledTarget {
    pub num: Vec<EisensteinInt>,
    pub den: BigInt,
}

impl ScaledTarget {
    pub fn new(coords: &[CycloElem]) -> Self {
        let den = coords.iter().fold(BigInt::one(), |acc, c| {
            acc.lcm(c.a.denom()).lcm(c.b.denom())
        });
        let d = Rational::from_integer(den.clone());
        let num = coords
            .iter()
            .map(|c| c.scale(&d).to_integer().expect("denominator cleared"))
            .collect();
        ScaledTarget { num, den }
    }

    /// Squared distances scale by `3·den²` into integers.
    pub fn cost_scale(&self) -> BigInt {
        BigInt::from(3) * &self.den * &self.den
    }
}

#[derive(Clone, Debug)]
struct Class {
    /// Index `3a + b` of the residue `a + bω` of each coordinate mod 3.
    residues: [usize; 12],
    digit_target: u8,
}

#[derive(Clone, Debug)]
struct Cand {
    cost: BigInt,
    x: EisensteinInt,
    digit: u8,
}

fn residue_rep(idx: usize) -> EisensteinInt {
    EisensteinInt::new((idx / 3) as i64, (idx % 3) as i64)
}

/// Precomputed glue classes of Λ.
#[derive(Clone, Debug)]
pub(crate) struct Decoder {
    classes: Vec<Class>,
}

impl Decoder {
    pub fn new(code: &GolayTernary) -> Self {
        let mut classes = Vec::with_capacity(3 * 729);
        for m in [0i64, 1, -1] {
            for word in code.codewords() {
                let mut residues = [0usize; 12];
                let mut sum = EisensteinInt::from_int(3 * m);
                for (i, &c) in word.iter().enumerate() {
                    // m + θc = (m + c) + 2cω
                    let a = (m + c as i64).rem_euclid(3) as usize;
                    let b = (2 * c as i64).rem_euclid(3) as usize;
                    residues[i] = 3 * a + b;
                    sum += residue_rep(residues[i]);
                }
                let k = sum
                    .div_exact(&EisensteinInt::from_int(3))
                    .expect("Golay words have coordinate sum divisible by 3");
                classes.push(Class {
                    residues,
                    digit_target: (-&k).residue_mod_theta(),
                });
            }
        }
        Decoder { classes }
    }

    /// Per coordinate and residue, every `x ≡ r (mod 3)` with
    /// `N(den·x - numᵢ) ≤ bound`, sorted by cost then value.
    fn candidates(target: &ScaledTarget, bound: &BigInt) -> Vec<Vec<Vec<Cand>>> {
        let d = &target.den;
        let three_d = Rational::from_integer(BigInt::from(3) * d);
        let radius = Rational::new(bound.clone(), BigInt::from(9) * d * d);
        let dd = EisensteinInt::from_parts(d.clone(), BigInt::zero());
        target
            .num
            .iter()
            .map(|t| {
                (0..9)
                    .map(|ri| {
                        let r = residue_rep(ri);
                        let shifted = CycloElem::from(&(t - &(&dd * &r)));
                        let center = CycloElem::new(&shifted.a / &three_d, &shifted.b / &three_d);
                        let mut cands: Vec<Cand> = EisensteinInt::in_disk(&center, &radius)
                            .into_iter()
                            .map(|w| {
                                let x = &r + &w.scale(&BigInt::from(3));
                                let cost = (&(&dd * &x) - t).norm();
                                Cand { cost, x, digit: w.residue_mod_theta() }
                            })
                            .filter(|c| &c.cost <= bound)
                            .collect();
                        cands.sort_by(|a, b| a.cost.cmp(&b.cost).then_with(|| a.x.cmp(&b.x)));
                        cands
                    })
                    .collect()
            })
            .collect()
    }

    /// `lb[i][s]`: least total cost of coordinates `i..` with digit sum `s`.
    fn lower_bounds(class: &Class, lists: &[Vec<Vec<Cand>>]) -> Vec<[Option<BigInt>; 3]> {
        let mut lb: Vec<[Option<BigInt>; 3]> = vec![[None, None, None]; 13];
        lb[12][0] = Some(BigInt::zero());
        for i in (0..12).rev() {
            let mut best: [Option<BigInt>; 3] = [None, None, None];
            for c in &lists[i][class.residues[i]] {
                // sorted by cost, so the first of each digit is its minimum
                for s in 0..3u8 {
                    let rest = (s + 3 - c.digit) % 3;
                    if let Some(r) = &lb[i + 1][rest as usize] {
                        let v = &c.cost + r;
                        let slot = &mut best[s as usize];
                        if slot.as_ref().is_none_or(|b| &v < b) {
                            *slot = Some(v);
                        }
                    }
                }
            }
            lb[i] = best;
        }
        lb
    }

    /// Calls `visit` on every lattice point within `bound` (scaled cost),
    /// with its cost. Visit order is deterministic.
    pub fn visit<F: FnMut(&[EisensteinInt], &BigInt)>(&self, target: &ScaledTarget, bound: &BigInt, mut visit: F) {
        let list_bound = bound.max(&(BigInt::from(9) * &target.den * &target.den)).clone();
        let lists = Self::candidates(target, &list_bound);
        let mut x = vec![EisensteinInt::zero(); 12];
        for class in &self.classes {
            let lb = Self::lower_bounds(class, &lists);
            match &lb[0][class.digit_target as usize] {
                Some(v) if v <= bound => {}
                _ => continue,
            }
            Self::dfs(0, class, &lists, &lb, class.digit_target, &BigInt::zero(), bound, &mut x, &mut visit);
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs<F: FnMut(&[EisensteinInt], &BigInt)>(
        i: usize,
        class: &Class,
        lists: &[Vec<Vec<Cand>>],
        lb: &[[Option<BigInt>; 3]],
        need: u8,
        acc: &BigInt,
        bound: &BigInt,
        x: &mut Vec<EisensteinInt>,
        visit: &mut F,
    ) {
        if i == 12 {
            if need == 0 {
                visit(x, acc);
            }
            return;
        }
        let floor = lb[i + 1].iter().flatten().min().cloned();
        for c in &lists[i][class.residues[i]] {
            let here = acc + &c.cost;
            if let Some(f) = &floor {
                if &(&here + f) > bound {
                    break;
                }
            }
            let rest = (need + 3 - c.digit) % 3;
            let Some(r) = &lb[i + 1][rest as usize] else { continue };
            if &(&here + r) > bound {
                continue;
            }
            x[i] = c.x.clone();
            Self::dfs(i + 1, class, lists, lb, rest, &here, bound, x, visit);
        }
    }

    /// Least scaled cost over Λ; exact because every digit class of every
    /// coordinate has a candidate within `9·den²`.
    pub fn min_cost(&self, target: &ScaledTarget) -> BigInt {
        let lists = Self::candidates(target, &(BigInt::from(9) * &target.den * &target.den));
        self.classes
            .iter()
            .filter_map(|class| Self::lower_bounds(class, &lists)[0][class.digit_target as usize].clone())
            .min()
            .expect("Λ is nonempty")
    }

    /// The lexicographically least point among those at least cost, and that
    /// cost.
    pub fn nearest(&self, target: &ScaledTarget) -> (LeechPoint, BigInt) {
        let best = self.min_cost(target);
        let mut winner: Option<LeechPoint> = None;
        self.visit(target, &best, |x, cost| {
            debug_assert_eq!(cost, &best);
            let p = LeechPoint::from_slice(x).expect("twelve coordinates");
            if winner.as_ref().is_none_or(|w| &p < w) {
                winner = Some(p);
            }
        });
        (winner.expect("minimum is attained"), best)
    }

    #[cfg(test)]
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}
