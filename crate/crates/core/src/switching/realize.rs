use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::{SchemeError, SwitchingScheme};
use crate::designs::{full_mask, Block, DesignParams, IncidenceStructure};
use crate::exact::{int, Rational};
use crate::lp::{certifies_infeasible, solve, LpOutcome};

/// Weights on the "point `p` lies in `r` blocks" and "pair `{p, q}` lies in
/// `λ` blocks" equations whose combination has no solution with every
/// multiplicity at least one.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FarkasCertificate {
    /// `(p, q, numerator, denominator)`; zero weights omitted.
    pub pair_weights: Vec<(usize, usize, String)>,
    pub point_weights: Vec<(usize, String)>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Realizability {
    /// A design whose blocks are the nontrivial compatible vectors (with the
    /// multiplicities found), followed by the empty and the full block.
    Feasible { params: DesignParams, design: IncidenceStructure },
    Infeasible { certificate: FarkasCertificate },
}

/// Decides whether multiplicities `m_B ≥ 1` on the nontrivial compatible
/// vectors make them an `(r, λ)`-design. Writing `m_B = 1 + s_B` turns each
/// point and pair count into an equation `r − Σ s_B = c` with `c` the
/// number of vectors through it; the exact simplex minimizes `Σ s_B`.
pub fn design_realizable(scheme: &SwitchingScheme) -> Result<Realizability, SchemeError> {
    let v = scheme.v();
    let full = full_mask(v);
    let blocks: Vec<u64> =
        scheme.block_table()?.iter().map(|e| e.0).filter(|&c| c != 0 && c != full).collect();
    let k = blocks.len();
    // Columns: s_B for each block, then r, then λ.
    let (col_r, col_l) = (k, k + 1);
    let mut a: Vec<Vec<Rational>> = Vec::new();
    let mut b: Vec<Rational> = Vec::new();
    let mut labels: Vec<(usize, usize)> = Vec::new();
    for p in 0..v {
        for q in p..v {
            let mut row = vec![Rational::zero(); k + 2];
            let mut count = 0i64;
            for (j, &blk) in blocks.iter().enumerate() {
                if blk >> p & 1 == 1 && blk >> q & 1 == 1 {
                    row[j] = -Rational::one();
                    count += 1;
                }
            }
            row[if p == q { col_r } else { col_l }] = Rational::one();
            a.push(row);
            b.push(int(count));
            labels.push((p, q));
        }
    }
    let mut cost = vec![Rational::one(); k];
    cost.extend([Rational::zero(), Rational::zero()]);
    match solve(&a, &b, &cost) {
        LpOutcome::Optimal { x, .. } => {
            let mults: Vec<Rational> = x[..k].iter().map(|s| s + Rational::one()).collect();
            let den = mults.iter().fold(BigInt::one(), |acc, m| acc.lcm(m.denom()));
            let mut out = Vec::with_capacity(k + 2);
            for (&blk, m) in blocks.iter().zip(&mults) {
                let scaled = (m * Rational::from_integer(den.clone())).to_integer();
                let mult = scaled.to_u64().ok_or(SchemeError::Overflow)?;
                out.push(Block::new(blk, mult));
            }
            out.push(Block::new(0, 1));
            out.push(Block::new(full, 1));
            let design = IncidenceStructure::new(v, out)?;
            let params = design.validate()?;
            Ok(Realizability::Feasible { params, design })
        }
        LpOutcome::Infeasible { y } => {
            debug_assert!(certifies_infeasible(&a, &b, &y));
            let mut pair_weights = Vec::new();
            let mut point_weights = Vec::new();
            for ((p, q), w) in labels.into_iter().zip(y) {
                if w.is_zero() {
                    continue;
                }
                if p == q {
                    point_weights.push((p, w.to_string()));
                } else {
                    pair_weights.push((p, q, w.to_string()));
                }
            }
            Ok(Realizability::Infeasible { certificate: FarkasCertificate { pair_weights, point_weights } })
        }
        LpOutcome::Unbounded => unreachable!("objective is bounded below by zero"),
    }
}

impl FarkasCertificate {
    /// Re-checks the certificate against the scheme's compatible vectors:
    /// the weighted combination of equations gives every multiplicity a
    /// nonpositive coefficient (and `r`, `λ` nonpositive ones) while the
    /// constant side is positive.
    pub fn verify(&self, scheme: &SwitchingScheme) -> Result<bool, SchemeError> {
        let v = scheme.v();
        let full = full_mask(v);
        let parse = |s: &str| s.parse::<Rational>().ok();
        let mut weights: Vec<((usize, usize), Rational)> = Vec::new();
        for (p, q, w) in &self.pair_weights {
            weights.push(((*p, *q), parse(w).ok_or_else(|| SchemeError::BadFile(w.clone()))?));
        }
        for (p, w) in &self.point_weights {
            weights.push(((*p, *p), parse(w).ok_or_else(|| SchemeError::BadFile(w.clone()))?));
        }
        let r_coef: Rational = weights.iter().filter(|((p, q), _)| p == q).map(|(_, w)| w.clone()).sum();
        let l_coef: Rational = weights.iter().filter(|((p, q), _)| p != q).map(|(_, w)| w.clone()).sum();
        let mut constant = Rational::zero();
        let mut ok = r_coef <= Rational::zero() && l_coef <= Rational::zero();
        for &(chi, _) in scheme.block_table()? {
            if chi == 0 || chi == full {
                continue;
            }
            let c: Rational = weights
                .iter()
                .filter(|((p, q), _)| chi >> p & 1 == 1 && chi >> q & 1 == 1)
                .map(|(_, w)| w.clone())
                .sum();
            // Equation: r (or λ) − Σ s_B = count, so s_B has coefficient −c.
            ok &= c >= Rational::zero();
            constant += c;
        }
        Ok(ok && constant > Rational::zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ratio, RatMatrix};
    use crate::switching::Provenance;

    #[test]
    fn gm4_is_realizable_with_unit_multiplicities() {
        let r = &RatMatrix::all_ones(4).scale(&ratio(1, 2)) - &RatMatrix::identity(4);
        let s = SwitchingScheme::new(r, Provenance::Raw).unwrap();
        match design_realizable(&s).unwrap() {
            Realizability::Feasible { params, design } => {
                assert_eq!(params, DesignParams { r: 4, lambda: 2 });
                assert!(design.blocks().iter().all(|b| b.mult == 1));
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
