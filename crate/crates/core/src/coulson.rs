//! Vertex energies from characteristic polynomials alone:
//!
//! `E(v) = (1/pi) PV int_R Re[1 - ix phi(G-v; ix) / phi(G; ix)] dx`.
//!
//! The integrand is assembled from exact integer polynomials. Common factors
//! of `x` are cancelled symbolically before any floating-point evaluation, so
//! zero eigenvalues never produce a 0/0 at the origin.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::charpoly::{charpoly, require_pendant};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{to_f64, IntPolynomial};
use crate::quadrature::{quadrature_pv, Quadrature};

pub const DEFAULT_TOL: f64 = 1e-8;

/// Rational integrand `1 - N(ix)/D(ix)` with `N = x phi(G-v)`, `D = phi(G)`,
/// both divided by `x^deflation_order`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegrandPair {
    pub numerator: IntPolynomial,
    pub denominator: IntPolynomial,
    /// `denominator - numerator`, exact; degree at most `deg denominator - 2`.
    pub difference: IntPolynomial,
    pub deflation_order: usize,
}

impl IntegrandPair {
    fn from_parts(numerator: IntPolynomial, denominator: IntPolynomial) -> Self {
        let s = denominator
            .root_zero_multiplicity()
            .min(numerator.root_zero_multiplicity());
        let numerator = numerator.deflate(s);
        let denominator = denominator.deflate(s);
        let difference = &denominator - &numerator;
        Self { numerator, denominator, difference, deflation_order: s }
    }

    /// `Re[1 - N(ix)/D(ix)]`, evaluated as `Re[(D - N)(ix) / D(ix)]`.
    pub fn eval(&self, x: f64) -> f64 {
        eval_ratio(&self.difference, &self.denominator, Complex64::new(0.0, x)).re
    }

    /// The full complex value `1 - N(ix)/D(ix)`; its imaginary part is odd in `x`.
    pub fn eval_complex(&self, x: f64) -> Complex64 {
        eval_ratio(&self.difference, &self.denominator, Complex64::new(0.0, x))
    }
}

/// `p(z) / q(z)` without overflow for large `|z|`: beyond the unit circle
/// both polynomials are evaluated in `w = 1/z` from their reversed
/// coefficients.
fn eval_ratio(p: &IntPolynomial, q: &IntPolynomial, z: Complex64) -> Complex64 {
    let (Some(dp), Some(dq)) = (p.degree(), q.degree()) else {
        return Complex64::new(0.0, 0.0);
    };
    if z.norm() <= 1.0 {
        return p.eval_complex(z) / q.eval_complex(z);
    }
    let w = z.inv();
    let reversed = |poly: &IntPolynomial| {
        poly.coeffs()
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * w + to_f64(c))
    };
    let ratio = reversed(p) / reversed(q);
    if dp >= dq {
        ratio * z.powi((dp - dq) as i32)
    } else {
        ratio * w.powi((dq - dp) as i32)
    }
}

pub fn build_integrand(g: &Graph, v: usize) -> Result<IntegrandPair> {
    let deleted = charpoly(&g.delete_vertex(v)?);
    Ok(IntegrandPair::from_parts(deleted.shift(1), charpoly(g)))
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidTolerance(tol))
    }
}

/// `(1/pi) int_R f` to absolute accuracy `tol` for an even integrand.
fn coulson_integral<F: Fn(f64) -> f64>(f: &F, tol: f64) -> Result<Quadrature> {
    check_tol(tol)?;
    let q = quadrature_pv(f, tol * PI).map_err(|e| match e {
        Error::NonConvergence { estimate, error_bound } => Error::NonConvergence {
            estimate: estimate / PI,
            error_bound: error_bound / PI,
        },
        other => other,
    })?;
    Ok(Quadrature {
        value: q.value / PI,
        error_estimate: q.error_estimate / PI,
        evaluations: q.evaluations,
    })
}

/// Energy of vertex `v` by the vertex Coulson integral, to absolute accuracy `tol`.
pub fn coulson_vertex_energy(g: &Graph, v: usize, tol: f64) -> Result<f64> {
    let pair = build_integrand(g, v)?;
    Ok(coulson_integral(&|x| pair.eval(x), tol)?.value)
}

/// Coulson energies of every vertex, in vertex order.
pub fn coulson_vertex_energies(g: &Graph, tol: f64) -> Result<Vec<f64>> {
    (0..g.n()).map(|v| coulson_vertex_energy(g, v, tol)).collect()
}

/// Which closed form to use for a pendant vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PendantForm {
    /// `-(1/pi) PV int Re[phi(G-u-v; ix) / phi(G; ix)] dx`, which follows from
    /// `phi(G) = x phi(G-v) - phi(G-u-v)`.
    #[default]
    Corrected,
    /// `(i/(2 pi)) PV int phi(G-u-v; ix) (ix) / phi(G; ix) dx` taken literally
    /// (real part). Its real integrand is odd for bipartite graphs, so it
    /// evaluates to zero there; kept for comparison only.
    AsPrinted,
}

/// Energy of a pendant vertex `v` (unique neighbor `u`) from
/// `phi(G - u - v)` and `phi(G)`.
pub fn coulson_pendant_energy(g: &Graph, u: usize, v: usize, tol: f64, form: PendantForm) -> Result<f64> {
    require_pendant(g, u, v)?;
    let reduced = charpoly(&g.delete_vertices(&[u, v]));
    let full = charpoly(g);
    let s = reduced.root_zero_multiplicity().min(full.root_zero_multiplicity());
    let (num, den) = (reduced.deflate(s), full.deflate(s));
    let ratio = |x: f64| eval_ratio(&num, &den, Complex64::new(0.0, x));
    let q = match form {
        PendantForm::Corrected => coulson_integral(&|x| -ratio(x).re, tol)?,
        PendantForm::AsPrinted => {
            // i * (ix) / (2 pi) = -x / (2 pi); symmetrize for the principal value
            let real = |x: f64| -x * ratio(x).re / (2.0 * PI);
            let even_part = |x: f64| 0.5 * (real(x) + real(-x));
            let q = coulson_integral(&even_part, tol)?;
            Quadrature { value: q.value * PI, error_estimate: q.error_estimate * PI, ..q }
        }
    };
    Ok(q.value)
}

/// `phi(G - v; z) / phi(G; z)`, the generating function
/// `sum_k (A^k)_vv z^(-k-1)` of closed walks at `v` (for `|z| > lambda_1`).
pub fn walk_generating_function(g: &Graph, v: usize, z: Complex64) -> Result<Complex64> {
    let num = charpoly(&g.delete_vertex(v)?);
    let den = charpoly(g);
    let d = den.eval_complex(z);
    if d.norm() <= 1e-12 * den.magnitude_bound(z.norm()) {
        return Err(Error::PoleAt { re: z.re, im: z.im });
    }
    Ok(num.eval_complex(z) / d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::{bipartite_coeffs, charpoly_minus_vertex};
    use crate::graph::{free_trees, make_family, parse_edge_list, Family};
    use crate::spectral::{decompose, vertex_energy_eigen};
    use approx::assert_abs_diff_eq;

    fn family(kind: Family, n: usize) -> Graph {
        make_family(kind, n).unwrap()
    }

    fn chair() -> Graph {
        parse_edge_list("0 1\n1 2\n2 3\n3 4\n3 5").unwrap()
    }

    const SAMPLES: [f64; 9] = [1e-3, 0.1, 0.37, 0.9, 1.5, 2.8, 7.0, 40.0, 1e4];

    #[test]
    fn star_closed_forms() {
        for k in 2..=12usize {
            let star = family(Family::Star, k + 1);
            let r = (k as f64).sqrt();
            assert_abs_diff_eq!(coulson_vertex_energy(&star, 0, 1e-9).unwrap(), r, epsilon = 1e-7);
            assert_abs_diff_eq!(coulson_vertex_energy(&star, 1, 1e-9).unwrap(), 1.0 / r, epsilon = 1e-7);
            // center integrand reduces to k / (x^2 + k)
            let pair = build_integrand(&star, 0).unwrap();
            for x in SAMPLES {
                assert_abs_diff_eq!(pair.eval(x), k as f64 / (x * x + k as f64), epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn k2_and_isolated_vertex() {
        let k2 = family(Family::Path, 2);
        let pair = build_integrand(&k2, 0).unwrap();
        assert_eq!(pair.deflation_order, 0);
        for x in SAMPLES {
            assert_abs_diff_eq!(pair.eval(x), 1.0 / (x * x + 1.0), epsilon = 1e-14);
        }
        assert_abs_diff_eq!(coulson_vertex_energy(&k2, 1, 1e-10).unwrap(), 1.0, epsilon = 1e-9);

        let single = Graph::empty(1);
        let pair = build_integrand(&single, 0).unwrap();
        assert_eq!(pair.deflation_order, 1);
        assert!(pair.difference.is_zero());
        assert_eq!(coulson_vertex_energy(&single, 0, 1e-8).unwrap(), 0.0);
    }

    #[test]
    fn star_deflation_order() {
        for k in 2..=9usize {
            let star = family(Family::Star, k + 1);
            for v in [0, 1] {
                let pair = build_integrand(&star, v).unwrap();
                assert_eq!(pair.deflation_order, k - 1);
                assert_ne!(pair.denominator.coeffs().last().map(|c| c.sign()), Some(num_bigint::Sign::NoSign));
            }
        }
    }

    #[test]
    fn chair_comparison() {
        let g = chair();
        let ev = coulson_vertex_energy(&g, 0, 1e-9).unwrap();
        let ew = coulson_vertex_energy(&g, 3, 1e-9).unwrap();
        assert!(ew > ev, "E(w) = {ew}, E(v) = {ev}");
    }

    #[test]
    fn agrees_with_spectral_oracle_on_small_trees() {
        for n in 1..=7 {
            for t in free_trees(n) {
                let s = decompose(&t);
                for v in 0..n {
                    let c = coulson_vertex_energy(&t, v, 1e-8).unwrap();
                    let e = vertex_energy_eigen(&s, v).unwrap();
                    assert_abs_diff_eq!(c, e, epsilon = 1e-6);
                }
            }
        }
    }

    #[test]
    fn integrand_matches_spectral_form() {
        // Re[1 - ix Phi(ix)] = sum_j p_vj lambda_j^2 / (x^2 + lambda_j^2)
        for g in [chair(), family(Family::Cycle, 5), family(Family::Complete, 4), family(Family::Star, 5)] {
            let s = decompose(&g);
            for v in 0..g.n() {
                let pair = build_integrand(&g, v).unwrap();
                for x in SAMPLES {
                    let spectral: f64 = s.weights[v]
                        .iter()
                        .zip(&s.eigenvalues)
                        .map(|(p, l)| p * l * l / (x * x + l * l))
                        .sum();
                    assert_abs_diff_eq!(pair.eval(x), spectral, epsilon = 1e-10);
                    assert!(pair.eval(x) >= -1e-12);
                    assert_abs_diff_eq!(pair.eval(x), pair.eval(-x), epsilon = 1e-12);
                    let z = pair.eval_complex(x);
                    assert_abs_diff_eq!(z.im, -pair.eval_complex(-x).im, epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn bipartite_real_form() {
        for t in free_trees(7).into_iter().chain([family(Family::Cycle, 6)]) {
            let b = bipartite_coeffs(&charpoly(&t)).unwrap();
            for v in 0..t.n() {
                let bv = bipartite_coeffs(&charpoly_minus_vertex(&t, v).unwrap()).unwrap();
                let pair = build_integrand(&t, v).unwrap();
                for x in SAMPLES.into_iter().filter(|&x| x >= 0.1) {
                    let series = |c: &crate::charpoly::BipartiteCoeffs| -> f64 {
                        c.b.iter().enumerate().map(|(k, bk)| to_f64(bk) * x.powi(-2 * k as i32)).sum()
                    };
                    let real_form = 1.0 - series(&bv) / series(&b);
                    assert_abs_diff_eq!(pair.eval(x), real_form, epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn pendant_forms() {
        for k in 2..=8usize {
            let star = family(Family::Star, k + 1);
            let leaf = coulson_pendant_energy(&star, 0, 1, 1e-9, PendantForm::Corrected).unwrap();
            assert_abs_diff_eq!(leaf, 1.0 / (k as f64).sqrt(), epsilon = 1e-7);
            let printed = coulson_pendant_energy(&star, 0, 1, 1e-9, PendantForm::AsPrinted).unwrap();
            assert_abs_diff_eq!(printed, 0.0, epsilon = 1e-9);
        }
        let k2 = family(Family::Path, 2);
        assert_abs_diff_eq!(
            coulson_pendant_energy(&k2, 0, 1, 1e-9, PendantForm::Corrected).unwrap(),
            1.0,
            epsilon = 1e-8
        );
        let g = chair();
        let tol = 1e-8;
        let via_pendant = coulson_pendant_energy(&g, 1, 0, tol, PendantForm::Corrected).unwrap();
        let via_vertex = coulson_vertex_energy(&g, 0, tol).unwrap();
        assert_abs_diff_eq!(via_pendant, via_vertex, epsilon = 2.0 * tol);
        assert_eq!(
            coulson_pendant_energy(&g, 2, 1, tol, PendantForm::Corrected),
            Err(Error::NotPendant { vertex: 1 })
        );
    }

    #[test]
    fn invalid_tolerance() {
        let k2 = family(Family::Path, 2);
        assert_eq!(coulson_vertex_energy(&k2, 0, 0.0), Err(Error::InvalidTolerance(0.0)));
        assert!(coulson_vertex_energy(&k2, 0, f64::NAN).is_err());
        assert!(coulson_vertex_energy(&k2, 2, 1e-8).is_err());
    }

    #[test]
    fn walk_generating_function_values() {
        let k2 = family(Family::Path, 2);
        let z = walk_generating_function(&k2, 0, Complex64::new(2.0, 0.0)).unwrap();
        assert_abs_diff_eq!(z.re, 2.0 / 3.0, epsilon = 1e-15);
        let p3 = family(Family::Path, 3);
        // leaf: (z^2 - 1) / (z^3 - 2z); center: z^2 / (z^3 - 2z)
        let z = walk_generating_function(&p3, 0, Complex64::new(2.0, 0.0)).unwrap();
        assert_abs_diff_eq!(z.re, 0.75, epsilon = 1e-15);
        let z = walk_generating_function(&p3, 1, Complex64::new(2.0, 0.0)).unwrap();
        assert_abs_diff_eq!(z.re, 1.0, epsilon = 1e-15);
        let series = crate::poly::laurent_at_infinity(
            &charpoly_minus_vertex(&p3, 1).unwrap(),
            &charpoly(&p3),
            3,
        )
        .unwrap();
        assert_eq!(series, [1, 0, 2].map(num_bigint::BigInt::from));
        assert!(matches!(
            walk_generating_function(&k2, 0, Complex64::new(1.0, 0.0)),
            Err(Error::PoleAt { .. })
        ));
        // z Phi(z) -> 1 as z -> infinity
        let big = Complex64::new(1e6, 0.0);
        let z = walk_generating_function(&chair(), 2, big).unwrap() * big;
        assert_abs_diff_eq!(z.re, 1.0, epsilon = 1e-9);
    }

    #[test]
    fn walk_generating_function_matches_spectral_representation() {
        for g in [chair(), family(Family::Cycle, 7), family(Family::Complete, 5)] {
            let s = decompose(&g);
            for v in 0..g.n() {
                for z in [Complex64::new(0.3, 1.1), Complex64::new(-2.0, 0.5), Complex64::new(5.0, 0.0)] {
                    let direct = walk_generating_function(&g, v, z).unwrap();
                    let spectral: Complex64 = s.weights[v]
                        .iter()
                        .zip(&s.eigenvalues)
                        .map(|(p, l)| *p / (z - l))
                        .sum();
                    assert_abs_diff_eq!(direct.re, spectral.re, epsilon = 1e-10);
                    assert_abs_diff_eq!(direct.im, spectral.im, epsilon = 1e-10);
                }
            }
        }
    }
}
