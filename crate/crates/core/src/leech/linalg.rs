//! Exact matrix routines over ℰ and ℚ(ω) for rank-12 Hermitian lattices.

use crate::field::{rat, CycloElem, EisensteinInt, Rational};

pub type Matrix = Vec<Vec<CycloElem>>;

/// `⅓ Σ xᵢ ȳᵢ`, the form in which the Leech lattice has minimal norm 6.
pub fn hermitian(x: &[CycloElem], y: &[CycloElem]) -> CycloElem {
    let mut acc = CycloElem::zero();
    for (a, b) in x.iter().zip(y) {
        acc += a * &b.conj();
    }
    acc.scale(&rat(1, 3))
}

pub fn to_cyclo_vec(x: &[EisensteinInt]) -> Vec<CycloElem> {
    x.iter().map(CycloElem::from).collect()
}

/// Echelon basis of the ℰ-span of `gens`, with pivots reduced by rounded
/// division; zero rows are dropped.
pub fn echelon(mut rows: Vec<Vec<EisensteinInt>>) -> Vec<Vec<EisensteinInt>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivot = 0;
    for col in 0..ncols {
        loop {
            // smallest nonzero entry in this column becomes the pivot
            let best = (pivot..rows.len())
                .filter(|&r| !rows[r][col].is_zero())
                .min_by(|&a, &b| rows[a][col].norm().cmp(&rows[b][col].norm()));
            let Some(best) = best else { break };
            rows.swap(pivot, best);
            let mut done = true;
            for r in pivot + 1..rows.len() {
                if rows[r][col].is_zero() {
                    continue;
                }
                let q = rows[r][col].div_round(&rows[pivot][col]);
                let p = rows[pivot].clone();
                for (x, y) in rows[r].iter_mut().zip(&p) {
                    *x -= &q * y;
                }
                if !rows[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if pivot < rows.len() && !rows[pivot][col].is_zero() {
            for r in 0..pivot {
                let q = rows[r][col].div_round(&rows[pivot][col]);
                if q.is_zero() {
                    continue;
                }
                let p = rows[pivot].clone();
                for (x, y) in rows[r].iter_mut().zip(&p) {
                    *x -= &q * y;
                }
            }
            pivot += 1;
        }
    }
    rows.truncate(pivot);
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    rows
}

/// Gram–Schmidt data of a basis under [`hermitian`]: `μ[i][j]` for `j < i`
/// and the squared lengths `d[i] = ⟨b*ᵢ, b*ᵢ⟩`.
pub fn gram_schmidt(gram: &Matrix) -> (Matrix, Vec<Rational>) {
    let n = gram.len();
    let mut mu = vec![vec![CycloElem::zero(); n]; n];
    let mut d: Vec<Rational> = Vec::with_capacity(n);
    // r[i][j] = ⟨b_i, b*_j⟩ = G[i][j] - Σ_{k<j} conj(μ[j][k]) r[i][k]
    let mut r = vec![vec![CycloElem::zero(); n]; n];
    for i in 0..n {
        for j in 0..=i {
            let mut v = gram[i][j].clone();
            for k in 0..j {
                v -= &mu[j][k].conj() * &r[i][k];
            }
            if j < i {
                mu[i][j] = v.scale(&(Rational::from_integer(1.into()) / &d[j]));
            }
            r[i][j] = v;
        }
        mu[i][i] = CycloElem::one();
        let dii = r[i][i].a.clone();
        d.push(dii);
    }
    (mu, d)
}

pub fn gram_of(basis: &[Vec<EisensteinInt>]) -> Matrix {
    let cb: Vec<Vec<CycloElem>> = basis.iter().map(|b| to_cyclo_vec(b)).collect();
    cb.iter()
        .map(|x| cb.iter().map(|y| hermitian(x, y)).collect())
        .collect()
}

/// LLL reduction over ℰ with Lovász constant 3/4; the rounding error of
/// Eisenstein rounding is at most 1/3, so the loop terminates.
pub fn lll(mut basis: Vec<Vec<EisensteinInt>>) -> Vec<Vec<EisensteinInt>> {
    let n = basis.len();
    let delta = rat(3, 4);
    let mut k = 1;
    while k < n {
        let (mut mu, _) = gram_schmidt(&gram_of(&basis));
        for j in (0..k).rev() {
            let q = mu[k][j].nearest_integer();
            if q.is_zero() {
                continue;
            }
            let bj = basis[j].clone();
            for (x, y) in basis[k].iter_mut().zip(&bj) {
                *x -= &q * y;
            }
            let qc = CycloElem::from(&q);
            for i in 0..=j {
                let t = &qc * &mu[j][i];
                mu[k][i] -= t;
            }
        }
        let (mu, d) = gram_schmidt(&gram_of(&basis));
        let lhs = d[k].clone();
        let rhs = (&delta - mu[k][k - 1].norm()) * &d[k - 1];
        if lhs >= rhs {
            k += 1;
        } else {
            basis.swap(k, k - 1);
            k = k.max(2) - 1;
        }
    }
    basis
}

/// Determinant by Gaussian elimination over ℚ(ω).
pub fn det(m: &Matrix) -> CycloElem {
    let n = m.len();
    let mut a = m.clone();
    let mut det = CycloElem::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return CycloElem::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let inv = a[c][c].inv();
        det *= &a[c][c];
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] * &inv;
            let pc = a[c].clone();
            for (x, y) in a[r].iter_mut().zip(&pc).skip(c) {
                *x -= &f * y;
            }
        }
    }
    det
}

/// Inverse by Gauss–Jordan elimination, `None` when singular.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut a = m.clone();
    let mut inv: Matrix = (0..n)
        .map(|i| (0..n).map(|j| if i == j { CycloElem::one() } else { CycloElem::zero() }).collect())
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(p, c);
        inv.swap(p, c);
        let s = a[c][c].inv();
        for x in a[c].iter_mut() {
            *x = &*x * &s;
        }
        for x in inv[c].iter_mut() {
            *x = &*x * &s;
        }
        for r in 0..n {
            if r == c || a[r][c].is_zero() {
                continue;
            }
            let f = a[r][c].clone();
            let (pa, pi) = (a[c].clone(), inv[c].clone());
            for (x, y) in a[r].iter_mut().zip(&pa) {
                *x -= &f * y;
            }
            for (x, y) in inv[r].iter_mut().zip(&pi) {
                *x -= &f * y;
            }
        }
    }
    Some(inv)
}

/// All `x ∈ ℰⁿ` with `Q(x - c) ≤ bound`, where `Q(x) = Σ xᵢ x̄ⱼ Gᵢⱼ` is
/// positive definite; the Fincke–Pohst recursion runs from the last
/// coordinate down, each level enumerating an exact disk in ℰ.
pub fn fincke_pohst(gram: &Matrix, center: &[CycloElem], bound: &Rational) -> Vec<Vec<EisensteinInt>> {
    let n = gram.len();
    let (mu, d) = gram_schmidt(gram);
    let mut out = Vec::new();
    let mut x = vec![EisensteinInt::zero(); n];
    fp_level(n, &mu, &d, center, bound, &mut x, &mut out);
    out
}

fn fp_level(
    level: usize,
    mu: &Matrix,
    d: &[Rational],
    center: &[CycloElem],
    remaining: &Rational,
    x: &mut Vec<EisensteinInt>,
    out: &mut Vec<Vec<EisensteinInt>>,
) {
    if level == 0 {
        out.push(x.clone());
        return;
    }
    let j = level - 1;
    // v = Σ_j (y_j + Σ_{i>j} y_i μ[i][j]) b*_j, y = x - c
    let mut shift = CycloElem::zero();
    for i in j + 1..x.len() {
        shift += (CycloElem::from(&x[i]) - &center[i]) * &mu[i][j];
    }
    let c = &center[j] - &shift;
    let r = remaining / &d[j];
    for cand in EisensteinInt::in_disk(&c, &r) {
        let used = (CycloElem::from(&cand) - &c).norm() * &d[j];
        x[j] = cand;
        let rest = remaining - used;
        fp_level(j, mu, d, center, &rest, x, out);
    }
    x[j] = EisensteinInt::zero();
}

pub fn is_zero_vec(x: &[EisensteinInt]) -> bool {
    x.iter().all(|v| v.is_zero())
}
