//! Brute-force graded Betti numbers from simplicial homology.
//!
//! Squarefree ideals go through Hochster's formula on the Stanley-Reisner
//! complex; arbitrary monomial ideals go through the upper Koszul simplicial
//! complexes `K^a`. Ranks of boundary matrices are exact, over the rationals
//! or a prime field. None of this shares code with the recursive formulas in
//! [`crate::resolution`]; it exists to check them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::model::{Monomial, MonomialIdeal, SimplicialComplex, VertexSet};
use crate::resolution::BettiTable;

/// Largest vertex set the oracle will enumerate subsets of.
pub const MAX_VERTICES: usize = 20;
/// Largest total degree of the lcm of the generators for the Koszul route.
pub const MAX_LCM_DEGREE: u32 = 24;

/// Coefficient field for homology.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Field {
    #[default]
    Rational,
    Prime(u32),
}

/// Face counts and boundary ranks of the augmented chain complex.
///
/// Both vectors are indexed by `d + 1`, so index 0 is the empty face.
/// `boundary_ranks[d + 1]` is the rank of `C_d -> C_{d-1}`; the map out of
/// `C_{-1}` is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplexSummary {
    pub face_counts: Vec<usize>,
    pub boundary_ranks: Vec<usize>,
}

impl ChainComplexSummary {
    /// `dim H~_d = f_d - rank_d - rank_{d+1}`, from `d = -1` up.
    pub fn reduced_homology(&self) -> Vec<usize> {
        (0..self.face_counts.len())
            .map(|k| {
                let next = self.boundary_ranks.get(k + 1).copied().unwrap_or(0);
                self.face_counts[k] - self.boundary_ranks[k] - next
            })
            .collect()
    }

    fn check_euler(&self) -> Result<()> {
        let alt = |v: &[usize]| {
            v.iter()
                .enumerate()
                .map(|(k, &c)| if k % 2 == 0 { -(c as i64) } else { c as i64 })
                .sum::<i64>()
        };
        for (k, &r) in self.boundary_ranks.iter().enumerate() {
            let below = if k == 0 { 0 } else { self.face_counts[k - 1] };
            if r > self.face_counts[k].min(below) {
                return Err(Error::Internal(format!("boundary rank {r} too large in degree {}", k as i64 - 1)));
            }
            let next = self.boundary_ranks.get(k + 1).copied().unwrap_or(0);
            if r + next > self.face_counts[k] {
                return Err(Error::Internal("negative homology dimension".into()));
            }
        }
        if alt(&self.reduced_homology()) != alt(&self.face_counts) {
            return Err(Error::Internal("Euler characteristic mismatch".into()));
        }
        Ok(())
    }
}

/// `Δ_W = {F ∈ Δ : F ⊆ W}`, on ground set `W`.
pub fn induced_subcomplex(complex: &SimplicialComplex, w: VertexSet) -> SimplicialComplex {
    if complex.is_void() {
        return SimplicialComplex::void(complex.ctx(), w);
    }
    let faces = complex.facets().iter().map(|f| f.intersection(w)).collect();
    SimplicialComplex::from_parts(complex.ctx(), w, faces)
}

/// Chain complex summary of the downward-closed family of subsets of
/// `ground` picked out by `is_face`.
fn summarize<F: Fn(VertexSet) -> bool>(ground: VertexSet, is_face: F, field: Field) -> Result<ChainComplexSummary> {
    if ground.len() > MAX_VERTICES {
        return Err(Error::Budget(format!(
            "{} vertices exceed the oracle limit of {MAX_VERTICES}",
            ground.len()
        )));
    }
    let mut by_dim: Vec<Vec<VertexSet>> = vec![Vec::new(); ground.len() + 1];
    for s in ground.subsets() {
        if is_face(s) {
            by_dim[s.len()].push(s);
        }
    }
    while by_dim.len() > 1 && by_dim.last().is_some_and(|v| v.is_empty()) {
        by_dim.pop();
    }
    if by_dim[0].is_empty() {
        // void: no faces at all
        return Ok(ChainComplexSummary {
            face_counts: vec![0],
            boundary_ranks: vec![0],
        });
    }
    let face_counts: Vec<usize> = by_dim.iter().map(Vec::len).collect();
    let mut boundary_ranks = vec![0];
    for k in 1..by_dim.len() {
        let rows = &by_dim[k - 1];
        let cols = &by_dim[k];
        let mut matrix = vec![vec![0i64; cols.len()]; rows.len()];
        for (c, &face) in cols.iter().enumerate() {
            for (pos, v) in face.iter().enumerate() {
                let r = rows
                    .binary_search_by_key(&face.without(v).0, |s| s.0)
                    .map_err(|_| Error::Internal("family is not closed under subsets".into()))?;
                matrix[r][c] = if pos % 2 == 0 { 1 } else { -1 };
            }
        }
        boundary_ranks.push(rank(matrix, field));
    }
    let summary = ChainComplexSummary {
        face_counts,
        boundary_ranks,
    };
    summary.check_euler()?;
    Ok(summary)
}

/// Chain complex summary of `Δ` over its ground set.
pub fn chain_summary(complex: &SimplicialComplex, field: Field) -> Result<ChainComplexSummary> {
    summarize(complex.vertices(), |s| complex.contains_face(s), field)
}

/// Reduced homology dimensions of `Δ` from degree `-1` up.
pub fn reduced_homology_dims(complex: &SimplicialComplex, field: Field) -> Result<Vec<usize>> {
    Ok(chain_summary(complex, field)?.reduced_homology())
}

/// `β_{i,j}(I) = Σ_{|W| = j} dim H~_{j-i-2}(Δ_W)` for squarefree `I`.
pub fn betti_hochster(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    check_proper_nonzero(ideal)?;
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let supports = ideal.supports();
    // vertices outside every generator are cone points of each Δ_W they lie in
    let ground = supports.iter().fold(VertexSet::EMPTY, |a, s| a.union(*s));
    if ground.len() > MAX_VERTICES {
        return Err(Error::Budget(format!(
            "{} vertices exceed the oracle limit of {MAX_VERTICES}",
            ground.len()
        )));
    }
    let mut table = BettiTable::minimal();
    for w in ground.subsets() {
        let gens_inside: Vec<VertexSet> = supports.iter().copied().filter(|s| s.is_subset(w)).collect();
        if gens_inside.is_empty() {
            // Δ_W is the full simplex on W
            continue;
        }
        let summary = summarize(w, |f| !gens_inside.iter().any(|s| s.is_subset(f)), field)?;
        let j = w.len();
        for (k, &h) in summary.reduced_homology().iter().enumerate() {
            // k = d + 1 with d = j - i - 2
            if h > 0 && j > k {
                table.add(j - k - 1, j as u32, h as u64);
            }
        }
    }
    Ok(table)
}

/// `β_{i,a}(I) = dim H~_{i-1}(K^a)` with `K^a = {σ squarefree : x^{a-σ} ∈ I}`,
/// summed over multidegrees `a` of total degree `j`.
pub fn betti_koszul(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    check_proper_nonzero(ideal)?;
    let lcm = ideal.lcm();
    if lcm.degree() > MAX_LCM_DEGREE {
        return Err(Error::Budget(format!(
            "lcm degree {} exceeds the oracle limit of {MAX_LCM_DEGREE}",
            lcm.degree()
        )));
    }
    let n = lcm.nvars();
    let bounds = lcm.exponents().to_vec();
    let mut table = BettiTable::minimal();
    let mut a = vec![0u32; n];
    loop {
        let xa = Monomial::from_exponents(a.clone());
        let dividing: Vec<&Monomial> = ideal.gens().iter().filter(|g| g.divides(&xa)).collect();
        // K^a is a cone unless a is the lcm of the generators dividing x^a
        let is_lcm = !dividing.is_empty()
            && (0..n).all(|i| dividing.iter().map(|g| g.exponent(i)).max() == Some(a[i]));
        if is_lcm {
            let support = xa.support();
            let summary = summarize(
                support,
                |s| {
                    let mut b = a.clone();
                    for v in s.iter() {
                        b[v] -= 1;
                    }
                    ideal.contains(&Monomial::from_exponents(b))
                },
                field,
            )?;
            let j = xa.degree();
            for (i, &h) in summary.reduced_homology().iter().enumerate() {
                if h > 0 {
                    table.add(i, j, h as u64);
                }
            }
        }
        // next multidegree below the lcm
        let mut p = 0;
        while p < n && a[p] == bounds[p] {
            a[p] = 0;
            p += 1;
        }
        if p == n {
            break;
        }
        a[p] += 1;
    }
    Ok(table)
}

/// Hochster for squarefree ideals, Koszul otherwise.
pub fn betti_oracle(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    if ideal.is_squarefree() {
        betti_hochster(ideal, field)
    } else {
        betti_koszul(ideal, field)
    }
}

/// `(reg(R/I), pd(R/I))` from the oracle table, with `reg(R/0) = pd(R/0) = 0`.
pub fn quotient_reg_pd(ideal: &MonomialIdeal, field: Field) -> Result<(i64, usize)> {
    if ideal.is_zero() {
        return Ok((0, 0));
    }
    let table = betti_oracle(ideal, field)?;
    let (pd, reg) = table.invariants()?;
    Ok((reg - 1, pd + 1))
}

/// `(reg(R/I_Δ), pd(R/I_Δ))` with `I_Δ` taken over the ground set.
pub fn complex_reg_pd(complex: &SimplicialComplex, field: Field) -> Result<(i64, usize)> {
    quotient_reg_pd(&complex.ideal()?, field)
}

/// `reg(R/I)` via the oracle.
pub fn quotient_reg(ideal: &MonomialIdeal) -> Result<i64> {
    Ok(quotient_reg_pd(ideal, Field::Rational)?.0)
}

fn check_proper_nonzero(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    Ok(())
}

/// Rank of an integer matrix over `field`.
pub fn rank(matrix: Vec<Vec<i64>>, field: Field) -> usize {
    match field {
        Field::Prime(p) => rank_mod_p(matrix, p as u64),
        Field::Rational => {
            let wide: Vec<Vec<i128>> = matrix.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
            match rank_i128(wide) {
                Some(r) => r,
                None => rank_bigint(
                    matrix
                        .into_iter()
                        .map(|r| r.into_iter().map(BigInt::from).collect())
                        .collect(),
                ),
            }
        }
    }
}

#[allow(clippy::needless_range_loop)]
fn rank_mod_p(mut m: Vec<Vec<i64>>, p: u64) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<u64>> = m
        .iter_mut()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let inv = |a: u64| {
        // Fermat
        let (mut base, mut e, mut acc) = (a % p, p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let scale = inv(m[rank][c]);
        for x in m[rank].iter_mut() {
            *x = *x * scale % p;
        }
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for cc in c..cols {
                    let sub = f * m[rank][cc] % p;
                    m[r][cc] = (m[r][cc] + p - sub) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Fraction-free elimination with row content removal; `None` on overflow.
#[allow(clippy::needless_range_loop)]
fn rank_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let pv = m[rank][c];
        for r in rank + 1..rows {
            let f = m[r][c];
            if f == 0 {
                continue;
            }
            let mut content = 0i128;
            for cc in c..cols {
                let v = m[r][cc].checked_mul(pv)?.checked_sub(f.checked_mul(m[rank][cc])?)?;
                m[r][cc] = v;
                content = content.gcd(&v);
            }
            if content > 1 {
                m[r][c..].iter_mut().for_each(|v| *v /= content);
            }
        }
        rank += 1;
    }
    Some(rank)
}

#[allow(clippy::needless_range_loop)]
fn rank_bigint(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let pv = m[rank][c].clone();
        for r in rank + 1..rows {
            let f = m[r][c].clone();
            if f.is_zero() {
                continue;
            }
            let mut content = BigInt::zero();
            for cc in c..cols {
                let v = &m[r][cc] * &pv - &f * &m[rank][cc];
                content = content.gcd(&v);
                m[r][cc] = v;
            }
            if content.abs() > BigInt::from(1) {
                m[r][c..].iter_mut().for_each(|v| *v = &*v / &content);
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Ctx, VariableContext};

    fn xyz() -> Ctx {
        VariableContext::new(["x", "y", "z"]).unwrap()
    }

    fn complex(ctx: &Ctx, facets: &[&[&str]]) -> SimplicialComplex {
        let fs = facets.iter().map(|f| ctx.set_from_names(f).unwrap()).collect();
        SimplicialComplex::new(ctx, ctx.all(), fs).unwrap()
    }

    fn ideal(ctx: &Ctx, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::parse(ctx, gens).unwrap()
    }

    #[test]
    fn induced() {
        let c = xyz();
        let d = complex(&c, &[&["x", "y"], &["y", "z"]]);
        let xz = c.set_from_names(&["x", "z"]).unwrap();
        assert_eq!(
            induced_subcomplex(&d, xz).facets(),
            &[VertexSet::singleton(0), VertexSet::singleton(2)]
        );
        assert_eq!(induced_subcomplex(&d, c.all()), d);
        let e = complex(&c, &[&["x", "y"]]);
        assert!(induced_subcomplex(&e, VertexSet::EMPTY).is_empty_face());
    }

    #[test]
    fn homology_examples() {
        let c = xyz();
        let circle = complex(&c, &[&["x", "y"], &["x", "z"], &["y", "z"]]);
        assert_eq!(reduced_homology_dims(&circle, Field::Rational).unwrap(), vec![0, 0, 1]);
        let full = SimplicialComplex::simplex(&c, c.all());
        assert!(reduced_homology_dims(&full, Field::Rational).unwrap().iter().all(|&h| h == 0));
        let points = complex(&c, &[&["x"], &["y"]]);
        assert_eq!(reduced_homology_dims(&points, Field::Prime(2)).unwrap(), vec![0, 1]);
        assert_eq!(
            reduced_homology_dims(&SimplicialComplex::empty_face(&c, c.all()), Field::Rational).unwrap(),
            vec![1]
        );
    }

    #[test]
    fn projective_plane_sees_the_characteristic() {
        // six-vertex triangulation of RP^2: H~_1 and H~_2 are Z/2-visible only
        let c = VariableContext::indexed(6).unwrap();
        let tri = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
            [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3],
        ];
        let facets = tri.iter().map(|t| VertexSet::from_indices(t.iter().copied())).collect();
        let rp2 = SimplicialComplex::new(&c, c.all(), facets).unwrap();
        assert_eq!(reduced_homology_dims(&rp2, Field::Rational).unwrap(), vec![0, 0, 0, 0]);
        assert_eq!(reduced_homology_dims(&rp2, Field::Prime(2)).unwrap(), vec![0, 0, 1, 1]);
    }

    #[test]
    fn hochster_examples() {
        let c = xyz();
        let t = betti_hochster(&ideal(&c, &["x*y", "x*z", "y*z"]), Field::Rational).unwrap();
        assert_eq!(t.entries_u64(), vec![((0, 2), 3), ((1, 3), 2)]);
        let t = betti_hochster(&ideal(&c, &["x"]), Field::Rational).unwrap();
        assert_eq!(t.entries_u64(), vec![((0, 1), 1)]);
        let t = betti_hochster(&ideal(&c, &["x*y*z"]), Field::Rational).unwrap();
        assert_eq!(t.entries_u64(), vec![((0, 3), 1)]);
        assert_eq!(
            betti_hochster(&ideal(&c, &["x^2"]), Field::Rational),
            Err(Error::NotSquarefree)
        );
    }

    #[test]
    fn koszul_examples() {
        let c = xyz();
        let t = betti_koszul(&ideal(&c, &["x^2", "x*y", "y^2"]), Field::Rational).unwrap();
        assert_eq!(t.entries_u64(), vec![((0, 2), 3), ((1, 3), 2)]);
        let t = betti_koszul(&ideal(&c, &["x^3"]), Field::Rational).unwrap();
        assert_eq!(t.entries_u64(), vec![((0, 3), 1)]);
        let tri = ideal(&c, &["x*y", "x*z", "y*z"]);
        assert_eq!(
            betti_koszul(&tri, Field::Rational).unwrap(),
            betti_hochster(&tri, Field::Rational).unwrap()
        );
        // Koszul complex on three variables: 3, 3, 1
        let t = betti_koszul(&ideal(&c, &["x", "y", "z"]), Field::Rational).unwrap();
        assert_eq!(t.entries_u64(), vec![((0, 1), 3), ((1, 2), 3), ((2, 3), 1)]);
    }

    #[test]
    fn quotient_invariants() {
        let c = xyz();
        assert_eq!(quotient_reg_pd(&MonomialIdeal::zero(&c), Field::Rational).unwrap(), (0, 0));
        assert_eq!(quotient_reg_pd(&ideal(&c, &["x*y*z"]), Field::Rational).unwrap(), (2, 1));
        assert_eq!(quotient_reg_pd(&ideal(&c, &["x", "y"]), Field::Rational).unwrap(), (0, 2));
    }

    #[test]
    fn rational_rank_falls_back_on_overflow() {
        let big = i64::MAX / 2;
        let m = vec![vec![big, big - 1, 3], vec![big - 7, big, 5], vec![1, 2, 3]];
        let r = rank(m.clone(), Field::Rational);
        let b = rank_bigint(m.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect());
        assert_eq!(r, b);
        assert_eq!(r, 3);
        assert_eq!(rank(vec![vec![2, 4], vec![1, 2]], Field::Rational), 1);
        assert_eq!(rank(vec![vec![2, 0], vec![0, 1]], Field::Prime(2)), 1);
    }
}
