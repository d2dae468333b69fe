//! Fuß–Catalan identities, the alternating component `M^{(m)}` at small sizes,
//! root-poset filtered chains and the bounce-additivity explorer.

pub mod explorer;
pub mod roots;

use std::collections::HashMap;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::coinvariants::alternant_basis;
use crate::error::{Error, Result};
use crate::linalg::{rational_row, ColumnIndex, Echelon, IntegerEchelon};
use crate::paths::{binomial, enumerate_m_dyck};
use crate::poly::{BiDegree, Poly};
use crate::qtpoly::{QPoly, QtPolynomial};
use crate::vandermonde::delta;

pub use explorer::{decomposition_explorer, ExplorerReport};
pub use roots::{
    enumerate_filtered_chains, ideal_to_dyck, is_filtered_chain, FilteredChain, RootIdeal,
};

/// `(n, m)` pairs for which `fuss_hilbert_series` runs.
pub const FUSS_HILBERT_CASES: [(usize, usize); 5] = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)];

/// `[(m+1)n choose n]_q / [mn+1]_q`.
pub fn q_fuss_catalan(n: usize, m: usize) -> Result<QPoly> {
    QPoly::q_binomial((m + 1) * n, n)
        .div_exact(&QPoly::q_integer(m * n + 1))
        .ok_or_else(|| {
            Error::Falsified(format!("[{}]_q does not divide the q-binomial", m * n + 1))
        })
}

/// `Σ_D q^{area(D)}` over `m`-Dyck paths with `n` north steps.
pub fn area_generating_function(n: usize, m: usize) -> Result<QPoly> {
    let mut p = QPoly::zero();
    for d in enumerate_m_dyck(n, m)? {
        p.add_term(d.area(), 1.into());
    }
    Ok(p)
}

#[derive(Clone, Debug)]
pub struct FussCertificate {
    pub bidegree: BiDegree,
    /// `dim (⟨x,y⟩ 𝒜^m)_d`.
    pub maximal_rank: usize,
    /// `dim (𝒜^m)_d`.
    pub ideal_rank: usize,
}

impl FussCertificate {
    pub fn generators(&self) -> usize {
        self.ideal_rank - self.maximal_rank
    }
}

#[derive(Clone, Debug)]
pub struct FussHilbertReport {
    pub n: usize,
    pub m: usize,
    pub series: QtPolynomial,
    pub certificates: Vec<FussCertificate>,
    /// Total degree swept; the series must vanish there.
    pub margin_degree: u32,
}

impl FussHilbertReport {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "m": self.m,
            "series": self.series.to_json(),
            "margin_degree": self.margin_degree,
            "certificates": self.certificates.iter()
                .filter(|c| c.ideal_rank > 0)
                .map(|c| json!({
                    "bidegree": [c.bidegree.xdeg, c.bidegree.ydeg],
                    "ideal_dim": c.ideal_rank,
                    "maximal_ideal_dim": c.maximal_rank,
                    "generators": c.generators(),
                }))
                .collect::<Vec<_>>(),
        })
    }
}

pub fn fuss_hilbert_series(n: usize, m: usize) -> Result<QtPolynomial> {
    Ok(fuss_hilbert_report(n, m)?.series)
}

/// Hilbert series of `𝒜^m / ⟨x,y⟩𝒜^m`, where `𝒜` is the ideal of
/// `C[x,y]` generated by alternants. With `S_d = (𝒜^m)_d`,
/// `S_d = Σ_v v·S_{d−e_v} + span{Δ_{X_1}⋯Δ_{X_m} of bidegree d}` and the first
/// summand is `(⟨x,y⟩𝒜^m)_d`.
pub fn fuss_hilbert_report(n: usize, m: usize) -> Result<FussHilbertReport> {
    if !FUSS_HILBERT_CASES.contains(&(n, m)) {
        return Err(Error::Invalid(format!(
            "Fuss Hilbert series is capped to (n, m) in {FUSS_HILBERT_CASES:?}, got ({n}, {m})"
        )));
    }
    let top = (m * binomial(n, 2) as usize) as u32 + 1;
    let products = delta_products(n, m, top);
    let mut bases: HashMap<BiDegree, Vec<Poly>> = HashMap::new();
    let mut certificates = Vec::new();
    let mut series = QtPolynomial::zero();
    for s in 0..=top {
        let level: Vec<(FussCertificate, Vec<Poly>)> = (0..=s)
            .into_par_iter()
            .map(|i| {
                let d = BiDegree::new(i, s - i);
                let mut cols = ColumnIndex::default();
                let mut ech = IntegerEchelon::default();
                let mut basis = Vec::new();
                for v in 0..2 * n {
                    let (dx, dy) = if v < n { (1, 0) } else { (0, 1) };
                    let Some(lower) = d.checked_sub(BiDegree::new(dx, dy)) else {
                        continue;
                    };
                    let var = if v < n {
                        Poly::x(n, v)
                    } else {
                        Poly::y(n, v - n)
                    };
                    for g in bases.get(&lower).map(Vec::as_slice).unwrap_or(&[]) {
                        let f = g * &var;
                        if ech.insert_big(rational_row(&mut cols, &f)) {
                            basis.push(f);
                        }
                    }
                }
                let maximal_rank = ech.rank();
                for f in products.get(&d).map(Vec::as_slice).unwrap_or(&[]) {
                    if ech.insert_big(rational_row(&mut cols, f)) {
                        basis.push(f.clone());
                    }
                }
                let cert = FussCertificate {
                    bidegree: d,
                    maximal_rank,
                    ideal_rank: ech.rank(),
                };
                (cert, basis)
            })
            .collect();
        for (cert, basis) in level {
            series.add_term(
                cert.bidegree.xdeg,
                cert.bidegree.ydeg,
                cert.generators() as i64,
            );
            if cert.bidegree.total() == top && cert.generators() != 0 {
                return Err(Error::Falsified(format!(
                    "minimal generators of A^{m} in bidegree {} beyond the expected range",
                    cert.bidegree
                )));
            }
            bases.insert(cert.bidegree, basis);
            certificates.push(cert);
        }
    }
    Ok(FussHilbertReport {
        n,
        m,
        series,
        certificates,
        margin_degree: top,
    })
}

/// Products of `m` bivariate Vandermondes, grouped by bidegree, up to total
/// degree `top`. Factors are taken as multisets.
fn delta_products(n: usize, m: usize, top: u32) -> HashMap<BiDegree, Vec<Poly>> {
    let mut alternants: Vec<(BiDegree, Poly)> = Vec::new();
    for s in 0..=top {
        for i in 0..=s {
            let d = BiDegree::new(i, s - i);
            for x in alternant_basis(n, d) {
                alternants.push((d, delta(&x, n).expect("n within the determinant cap")));
            }
        }
    }
    let mut out: HashMap<BiDegree, Vec<Poly>> = HashMap::new();
    fn rec(
        alts: &[(BiDegree, Poly)],
        from: usize,
        left: usize,
        acc: (BiDegree, Poly),
        top: u32,
        out: &mut HashMap<BiDegree, Vec<Poly>>,
    ) {
        if left == 0 {
            out.entry(acc.0).or_default().push(acc.1);
            return;
        }
        for k in from..alts.len() {
            let (d, f) = &alts[k];
            let nd = BiDegree::new(acc.0.xdeg + d.xdeg, acc.0.ydeg + d.ydeg);
            if nd.total() > top {
                continue;
            }
            rec(alts, k, left - 1, (nd, &acc.1 * f), top, out);
        }
    }
    rec(
        &alternants,
        0,
        m,
        (BiDegree::default(), Poly::one(n)),
        top,
        &mut out,
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coinvariants::alternating_hilbert_series;
    use crate::paths::fuss_catalan;

    #[test]
    fn q_fuss_examples() {
        assert_eq!(
            q_fuss_catalan(2, 2).unwrap(),
            QPoly::from_coeffs([1, 0, 1, 0, 1])
        );
        assert_eq!(q_fuss_catalan(2, 1).unwrap(), QPoly::from_coeffs([1, 0, 1]));
        assert_eq!(q_fuss_catalan(3, 2).unwrap().eval_at_one(), 12.into());
        for n in 1..=5 {
            for m in 1..=3 {
                let fc = fuss_catalan(n, m);
                assert_eq!(q_fuss_catalan(n, m).unwrap().eval_at_one(), fc.into());
                assert_eq!(
                    area_generating_function(n, m).unwrap().eval_at_one(),
                    fc.into()
                );
            }
        }
    }

    #[test]
    fn area_generating_examples() {
        assert_eq!(
            area_generating_function(2, 2).unwrap(),
            QPoly::from_coeffs([1, 1, 1])
        );
        assert_eq!(
            area_generating_function(3, 1).unwrap(),
            QPoly::from_coeffs([1, 2, 1, 1])
        );
    }

    #[test]
    fn fuss_series_small() {
        let s = fuss_hilbert_series(2, 2).unwrap();
        assert_eq!(
            s,
            QtPolynomial::from_terms([((2, 0), 1), ((1, 1), 1), ((0, 2), 1)])
        );
        assert_eq!(
            fuss_hilbert_series(2, 1).unwrap(),
            alternating_hilbert_series(2).unwrap()
        );
        assert_eq!(
            fuss_hilbert_series(3, 1).unwrap(),
            alternating_hilbert_series(3).unwrap()
        );
        assert!(fuss_hilbert_series(4, 1).is_err());
    }

    #[test]
    fn fuss_specializations() {
        for (n, m) in FUSS_HILBERT_CASES {
            let h = fuss_hilbert_series(n, m).unwrap();
            assert_eq!(
                h.at_t_one(),
                area_generating_function(n, m).unwrap(),
                "({n},{m})"
            );
            let shift = (m * binomial(n, 2) as usize) as u32;
            assert_eq!(
                h.principal_specialization(shift).unwrap(),
                q_fuss_catalan(n, m).unwrap()
            );
            assert_eq!(h.eval_at_one(), fuss_catalan(n, m).into());
        }
    }
}
