//! Individual constants: series values in terms of π, ln, ζ(odd), Catalan's
//! constant, ψ′ and polylogarithms, and tabulated special-function values.

use std::f64::consts::{PI, SQRT_2};

use crate::error::Error;
use crate::error::Result;
use crate::evaluation::Evaluation;
use crate::oracle::{Family, SeriesSpec, SignConvention};
use crate::sequences::BINET;
use crate::specfun::{clausen, polylog, ConstantsTable};

use super::registry::{CheckPoint, Computed, Expression, Identity, Params, Quantity, Suite};

fn li(s: u32, x: f64) -> Result<f64> {
    Ok(polylog(s, x)?.value)
}

fn cl(n: u32, theta: f64) -> Result<f64> {
    Ok(clausen(n, theta)?.value)
}

fn table_zeta(c: &ConstantsTable, s: u32) -> Result<f64> {
    c.zeta(s).ok_or_else(|| Error::ContractViolation(format!("zeta({s}) is not tabulated")))
}

fn z3(c: &ConstantsTable) -> f64 {
    c.zeta_odd[0]
}

fn z5(c: &ConstantsTable) -> f64 {
    c.zeta_odd[1]
}

/// Tolerance multiplier for values involving ψ′.
const TRIGAMMA_SCALE: f64 = 10.0;

struct Example {
    id: &'static str,
    spec: SeriesSpec,
    text: &'static str,
    eval: fn(&ConstantsTable) -> Result<f64>,
    scale: f64,
}

fn ex(id: &'static str, spec: SeriesSpec, text: &'static str, eval: fn(&ConstantsTable) -> Result<f64>) -> Example {
    Example { id, spec, text, eval, scale: 1.0 }
}

fn ex_trigamma(
    id: &'static str,
    spec: SeriesSpec,
    text: &'static str,
    eval: fn(&ConstantsTable) -> Result<f64>,
) -> Example {
    Example { id, spec, text, eval, scale: TRIGAMMA_SCALE }
}

fn examples() -> Vec<Example> {
    use Family as F;
    use SignConvention::{Alternating as Alt, Positive as Pos};
    let p = |fam: Family, n: u32, z: f64, sign| SeriesSpec::new(fam, z, sign).with_n(n);
    let pmn = |m: u32, n: u32, z: f64, sign| SeriesSpec::new(F::Pmn, z, sign).with_m(m).with_n(n);
    let third = 1.0 / 3.0;
    let sixth = 1.0 / 6.0;
    vec![
        ex("p_alt_n1_z1", p(F::P, 1, 1.0, Alt), "-(1 + 5pi/12 - ln(2pi) + Li2(e^-2pi)/(2pi))", |c| {
            let t = 2.0 * c.pi;
            Ok(-(1.0 + 5.0 * c.pi / 12.0 - t.ln() + li(2, (-t).exp())? / t))
        }),
        ex(
            "p_alt_n1_z_inv_sqrt2",
            p(F::P, 1, 1.0 / SQRT_2, Alt),
            "-(1 + pi/(3 sqrt2) - ln(sqrt2 pi) + Li2(e^-sqrt2 pi)/(sqrt2 pi))",
            |c| {
                let t = SQRT_2 * c.pi;
                Ok(-(1.0 + c.pi / (3.0 * SQRT_2) - t.ln() + li(2, (-t).exp())? / t))
            },
        ),
        ex("p_alt_n1_z_half", p(F::P, 1, 0.5, Alt), "-(1 + pi/12 - ln(pi) + Li2(e^-pi)/pi)", |c| {
            Ok(-(1.0 + c.pi / 12.0 - c.pi.ln() + li(2, (-c.pi).exp())? / c.pi))
        }),
        ex(
            "kk_plus_n_alt_n1_z1",
            p(F::KKPlusN, 1, 1.0, Alt),
            "-(1/2 + 2pi/3 - ln(2pi) - (zeta3 - Li3(e^-2pi) - 2pi Li2(e^-2pi))/(2pi^2))",
            |c| {
                let t = 2.0 * c.pi;
                let e = (-t).exp();
                let inner = z3(c) - li(3, e)? - t * li(2, e)?;
                Ok(-(0.5 + 2.0 * c.pi / 3.0 - t.ln() - inner / (2.0 * c.pi * c.pi)))
            },
        ),
        ex("kk_plus_n_pos_n1_z1", p(F::KKPlusN, 1, 1.0, Pos), "-1/2 + ln(2pi)", |c| Ok(-0.5 + (2.0 * c.pi).ln())),
        ex(
            "kk_plus_n_pos_n2_z1",
            p(F::KKPlusN, 2, 1.0, Pos),
            "-1/8 + ln(2pi)/2 + 3 zeta3/(2pi^2)",
            |c| Ok(-0.125 + (2.0 * c.pi).ln() / 2.0 + 3.0 * z3(c) / (2.0 * c.pi * c.pi)),
        ),
        ex("p_pos_n1_z1", p(F::P, 1, 1.0, Pos), "-1 + ln(2pi)", |c| Ok(-1.0 + (2.0 * c.pi).ln())),
        ex("p_pos_n3_z1", p(F::P, 3, 1.0, Pos), "-1/9 + ln(2pi)/3 + zeta3/(2pi^2)", |c| {
            Ok(-1.0 / 9.0 + (2.0 * c.pi).ln() / 3.0 + z3(c) / (2.0 * c.pi * c.pi))
        }),
        ex("kk_plus_n_pos_n1_z_half", p(F::KKPlusN, 1, 0.5, Pos), "-1/2 + ln(pi) - 7 zeta3/(2pi^2)", |c| {
            Ok(-0.5 + c.pi.ln() - 7.0 * z3(c) / (2.0 * c.pi * c.pi))
        }),
        ex(
            "kk_plus_n_pos_n2_z_half",
            p(F::KKPlusN, 2, 0.5, Pos),
            "-1/8 + ln(pi)/2 - 9 zeta3/(2pi^2) + 93 zeta5/(4pi^4)",
            |c| {
                let pi2 = c.pi * c.pi;
                Ok(-0.125 + c.pi.ln() / 2.0 - 9.0 * z3(c) / (2.0 * pi2) + 93.0 * z5(c) / (4.0 * pi2 * pi2))
            },
        ),
        ex("p_pos_n1_z_half", p(F::P, 1, 0.5, Pos), "ln(pi) - 1", |c| Ok(c.pi.ln() - 1.0)),
        ex("p_pos_n3_z_half", p(F::P, 3, 0.5, Pos), "-1/9 + ln(pi)/3 - 3 zeta3/(2pi^2)", |c| {
            Ok(-1.0 / 9.0 + c.pi.ln() / 3.0 - 3.0 * z3(c) / (2.0 * c.pi * c.pi))
        }),
        ex("p_pos_n1_z_quarter", p(F::P, 1, 0.25, Pos), "ln(pi/2) - 1 + 2G/pi", |c| {
            Ok((c.pi / 2.0).ln() - 1.0 + 2.0 * c.catalan / c.pi)
        }),
        ex("p_pos_n1_z_three_quarters", p(F::P, 1, 0.75, Pos), "ln(3pi/2) - 1 - 2G/(3pi)", |c| {
            Ok((1.5 * c.pi).ln() - 1.0 - 2.0 * c.catalan / (3.0 * c.pi))
        }),
        ex_trigamma(
            "p_pos_n1_z_third",
            p(F::P, 1, third, Pos),
            "ln(2pi/3) - 1 - sqrt3 pi/9 + sqrt3 psi'(1/3)/(6pi)",
            |c| {
                let s3 = 3f64.sqrt();
                Ok((2.0 * c.pi / 3.0).ln() - 1.0 - s3 * c.pi / 9.0 + s3 * c.trigamma_third / (6.0 * c.pi))
            },
        ),
        ex_trigamma(
            "p_pos_n1_z_sixth",
            p(F::P, 1, sixth, Pos),
            "ln(pi/3) - 1 - pi/sqrt3 + sqrt3 psi'(1/3)/(2pi)",
            |c| {
                let s3 = 3f64.sqrt();
                Ok((c.pi / 3.0).ln() - 1.0 - c.pi / s3 + s3 * c.trigamma_third / (2.0 * c.pi))
            },
        ),
        ex_trigamma(
            "p_pos_n1_z_eighth",
            p(F::P, 1, 0.125, Pos),
            "ln(pi/4) - 1 - (sqrt2+1)pi/4 - (2sqrt2-1)G/pi + sqrt2 psi'(1/8)/(8pi)",
            |c| {
                Ok((c.pi / 4.0).ln() - 1.0 - (SQRT_2 + 1.0) * c.pi / 4.0 - (2.0 * SQRT_2 - 1.0) * c.catalan / c.pi
                    + SQRT_2 * c.trigamma_eighth / (8.0 * c.pi))
            },
        ),
        ex(
            "kk_plus_n_pos_n1_z_quarter",
            p(F::KKPlusN, 1, 0.25, Pos),
            "ln(pi/2) - 1/2 - 35 zeta3/(4pi^2) + 4G/pi",
            |c| Ok((c.pi / 2.0).ln() - 0.5 - 35.0 * z3(c) / (4.0 * c.pi * c.pi) + 4.0 * c.catalan / c.pi),
        ),
        ex("half_int_pos_z_half", SeriesSpec::new(F::HalfInt, 0.5, Pos), "1/2 - ln2/2", |c| Ok(0.5 - c.ln2 / 2.0)),
        ex("half_int_pos_z_quarter", SeriesSpec::new(F::HalfInt, 0.25, Pos), "1/2 - ln2/4 - G/pi", |c| {
            Ok(0.5 - c.ln2 / 4.0 - c.catalan / c.pi)
        }),
        ex(
            "half_int_pos_z_three_quarters",
            SeriesSpec::new(F::HalfInt, 0.75, Pos),
            "1/2 - ln2/4 + G/(3pi)",
            |c| Ok(0.5 - c.ln2 / 4.0 + c.catalan / (3.0 * c.pi)),
        ),
        ex("half_int_k_plus_one_pos_z1", SeriesSpec::new(F::HalfIntKPlusOne, 1.0, Pos), "1/2", |_| Ok(0.5)),
        ex(
            "half_int_k_plus_one_pos_z_half",
            SeriesSpec::new(F::HalfIntKPlusOne, 0.5, Pos),
            "1/2 - 7 zeta3/(2pi^2)",
            |c| Ok(0.5 - 7.0 * z3(c) / (2.0 * c.pi * c.pi)),
        ),
        ex(
            "half_int_k_plus_one_pos_z_quarter",
            SeriesSpec::new(F::HalfIntKPlusOne, 0.25, Pos),
            "1/2 - 35 zeta3/(4pi^2) + 2G/pi",
            |c| Ok(0.5 - 35.0 * z3(c) / (4.0 * c.pi * c.pi) + 2.0 * c.catalan / c.pi),
        ),
        ex(
            "half_int_k_plus_one_pos_z_three_quarters",
            SeriesSpec::new(F::HalfIntKPlusOne, 0.75, Pos),
            "1/2 - 35 zeta3/(36pi^2) - 2G/(3pi)",
            |c| Ok(0.5 - 35.0 * z3(c) / (36.0 * c.pi * c.pi) - 2.0 * c.catalan / (3.0 * c.pi)),
        ),
        ex_trigamma(
            "half_int_k_plus_one_pos_z_sixth",
            SeriesSpec::new(F::HalfIntKPlusOne, sixth, Pos),
            "1/2 - pi/sqrt3 - 12 zeta3/pi^2 + sqrt3 psi'(1/3)/(2pi)",
            |c| {
                let s3 = 3f64.sqrt();
                Ok(0.5 - c.pi / s3 - 12.0 * z3(c) / (c.pi * c.pi) + s3 * c.trigamma_third / (2.0 * c.pi))
            },
        ),
        ex(
            "fibonacci_alt_n1_z_half",
            p(F::FibP, 1, 0.5, Alt),
            "-(pi/4 - 2 ln(alpha) + pi sinh(ln alpha)/3 - (alpha Li2(e^(pi beta)) + beta Li2(e^(-pi alpha)))/pi)/sqrt5",
            |c| {
                let (a, b) = (BINET.alpha, BINET.beta);
                let lis = a * li(2, (c.pi * b).exp())? + b * li(2, (-c.pi * a).exp())?;
                let inner = c.pi / 4.0 - 2.0 * c.ln_alpha + c.pi * c.ln_alpha.sinh() / 3.0 - lis / c.pi;
                Ok(-inner / BINET.sqrt5)
            },
        ),
        ex(
            "lucas_alt_n1_z_half",
            p(F::LucP, 1, 0.5, Alt),
            "-((8 + pi sqrt5)/4 - 2 ln(pi) - pi cosh(ln alpha)/3 + (alpha Li2(e^(pi beta)) - beta Li2(e^(-pi alpha)))/pi)",
            |c| {
                let (a, b) = (BINET.alpha, BINET.beta);
                let lis = a * li(2, (c.pi * b).exp())? - b * li(2, (-c.pi * a).exp())?;
                Ok(-((8.0 + c.pi * BINET.sqrt5) / 4.0 - 2.0 * c.pi.ln() - c.pi * c.ln_alpha.cosh() / 3.0
                    + lis / c.pi))
            },
        ),
        ex(
            "fibonacci_pos_n1_z_half",
            p(F::FibP, 1, 0.5, Pos),
            "2 ln(alpha)/sqrt5 - (beta Cl2(pi alpha) - alpha Cl2(pi beta))/(sqrt5 pi)",
            |c| {
                let (a, b) = (BINET.alpha, BINET.beta);
                let cls = b * cl(2, c.pi * a)? - a * cl(2, c.pi * b)?;
                Ok(2.0 * c.ln_alpha / BINET.sqrt5 - cls / (BINET.sqrt5 * c.pi))
            },
        ),
        ex(
            "lucas_pos_n1_z_half",
            p(F::LucP, 1, 0.5, Pos),
            "2 ln(pi) - 2 - (beta Cl2(pi alpha) + alpha Cl2(pi beta))/pi",
            |c| {
                let (a, b) = (BINET.alpha, BINET.beta);
                let cls = b * cl(2, c.pi * a)? + a * cl(2, c.pi * b)?;
                Ok(2.0 * c.pi.ln() - 2.0 - cls / c.pi)
            },
        ),
        ex(
            "pmn_alt_m1_n2_z1",
            pmn(1, 2, 1.0, Alt),
            "-(3/4 + pi/12 - ln(2pi)/2 + zeta3/(2pi)^2 - Li3(e^-2pi)/(2pi)^2)",
            |c| {
                let t = 2.0 * c.pi;
                Ok(-(0.75 + c.pi / 12.0 - t.ln() / 2.0 + (z3(c) - li(3, (-t).exp())?) / (t * t)))
            },
        ),
        ex(
            "pmn_alt_m1_n2_z_half",
            pmn(1, 2, 0.5, Alt),
            "-(3/4 - pi/12 - ln(pi)/2 + zeta3/pi^2 - Li3(e^-pi)/pi^2)",
            |c| {
                let pi2 = c.pi * c.pi;
                Ok(-(0.75 - c.pi / 12.0 - c.pi.ln() / 2.0 + (z3(c) - li(3, (-c.pi).exp())?) / pi2))
            },
        ),
        ex(
            "pmn_alt_m1_n3_z_half",
            pmn(1, 3, 0.5, Alt),
            "-(4/9 - 7pi/720 - ln(pi)/3 - Li3(e^-pi)/pi^2 - Li4(e^-pi)/pi^3)",
            |c| {
                let e = (-c.pi).exp();
                Ok(-(4.0 / 9.0 - 7.0 * c.pi / 720.0 - c.pi.ln() / 3.0 - li(3, e)? / (c.pi * c.pi)
                    - li(4, e)? / c.pi.powi(3)))
            },
        ),
        ex("pmn_pos_m1_n3_z1", pmn(1, 3, 1.0, Pos), "-4/9 + ln(2pi)/3 - zeta3/(4pi^2)", |c| {
            Ok(-4.0 / 9.0 + (2.0 * c.pi).ln() / 3.0 - z3(c) / (4.0 * c.pi * c.pi))
        }),
        ex("pmn_pos_m2_n4_z1", pmn(2, 4, 1.0, Pos), "(-3/8 + ln(2pi)/2 - 3 zeta3/(2pi^2))/4", |c| {
            Ok((-0.375 + (2.0 * c.pi).ln() / 2.0 - 3.0 * z3(c) / (2.0 * c.pi * c.pi)) / 4.0)
        }),
        ex(
            "pmn_pos_m3_n5_z1",
            pmn(3, 5, 1.0, Pos),
            "-8/225 + ln(2pi)/15 - zeta3/(4pi^2) + 3 zeta5/(4pi^4)",
            |c| {
                let pi2 = c.pi * c.pi;
                Ok(-8.0 / 225.0 + (2.0 * c.pi).ln() / 15.0 - z3(c) / (4.0 * pi2) + 3.0 * z5(c) / (4.0 * pi2 * pi2))
            },
        ),
        ex("pmn_pos_m4_n3_z1", pmn(4, 3, 1.0, Pos), "(-7/72 + ln(2pi)/6 - zeta3/(2pi^2))/2", |c| {
            Ok((-7.0 / 72.0 + (2.0 * c.pi).ln() / 6.0 - z3(c) / (2.0 * c.pi * c.pi)) / 2.0)
        }),
        ex(
            "pmn_pos_m2_n5_z1",
            pmn(2, 5, 1.0, Pos),
            "(-7/50 + ln(2pi)/5 - 2 zeta3/(3pi^2) + zeta5/pi^4)/2",
            |c| {
                let pi2 = c.pi * c.pi;
                Ok((-7.0 / 50.0 + (2.0 * c.pi).ln() / 5.0 - 2.0 * z3(c) / (3.0 * pi2) + z5(c) / (pi2 * pi2)) / 2.0)
            },
        ),
        ex(
            "bernoulli_odd_z1",
            SeriesSpec::new(F::BernoulliOdd, 1.0, Pos),
            "5/2 - pi^2/3 + 2 Li2(e^-1)",
            |c| Ok(2.5 - c.pi * c.pi / 3.0 + 2.0 * li(2, (-1f64).exp())?),
        ),
        ex("bernoulli_even_z2", SeriesSpec::new(F::BernoulliEven, 2.0, Pos), "2 ln(sinh 1)", |_| {
            Ok(2.0 * 1f64.sinh().ln())
        }),
    ]
}

/// One registry entry per example constant, compared with the brute-force
/// series.
pub(super) fn example_entries() -> Vec<Identity> {
    examples()
        .into_iter()
        .map(|e| {
            let expr = Expression { text: e.text, eval: e.eval, ops: 24 };
            Identity {
                id: format!("example_{}", e.id),
                suite: Suite::Examples,
                formula: format!("{} = {}", e.spec.family, e.text),
                closed: None,
                points: vec![CheckPoint {
                    params: Params::of(&e.spec),
                    closed: Quantity::Expression(expr),
                    oracle: Quantity::Oracle(e.spec),
                }],
                tolerance_scale: e.scale,
            }
        })
        .collect()
}

struct Special {
    id: &'static str,
    text: &'static str,
    computed: fn() -> Result<Evaluation>,
    exact: fn(&ConstantsTable) -> Result<f64>,
}

fn sp(
    id: &'static str,
    text: &'static str,
    computed: fn() -> Result<Evaluation>,
    exact: fn(&ConstantsTable) -> Result<f64>,
) -> Special {
    Special { id, text, computed, exact }
}

fn specials() -> Vec<Special> {
    vec![
        sp("clausen2_pi", "Cl2(pi) = 0", || clausen(2, PI), |_| Ok(0.0)),
        sp("clausen2_half_pi", "Cl2(pi/2) = G", || clausen(2, PI / 2.0), |k| Ok(k.catalan)),
        sp("clausen2_three_half_pi", "Cl2(3pi/2) = -G", || clausen(2, 1.5 * PI), |k| Ok(-k.catalan)),
        sp(
            "clausen2_third_pi",
            "Cl2(pi/3) = (3/2) Cl2(2pi/3)",
            || clausen(2, PI / 3.0),
            |_| Ok(1.5 * cl(2, 2.0 * PI / 3.0)?),
        ),
        sp(
            "clausen2_sixth_pi_pair",
            "Cl2(pi/6) + Cl2(5pi/6) = 4G/3",
            || Ok(clausen(2, PI / 6.0)? + clausen(2, 5.0 * PI / 6.0)?),
            |k| Ok(4.0 * k.catalan / 3.0),
        ),
        sp(
            "clausen2_two_third_pi",
            "Cl2(2pi/3) = sqrt3/9 (psi'(1/3) - 2pi^2/3)",
            || clausen(2, 2.0 * PI / 3.0),
            |k| Ok(3f64.sqrt() / 9.0 * (k.trigamma_third - 2.0 * k.pi * k.pi / 3.0)),
        ),
        sp(
            "clausen2_third_pi_trigamma",
            "Cl2(pi/3) = sqrt3/6 (psi'(1/3) - 2pi^2/3)",
            || clausen(2, PI / 3.0),
            |k| Ok(3f64.sqrt() / 6.0 * (k.trigamma_third - 2.0 * k.pi * k.pi / 3.0)),
        ),
        sp(
            "clausen2_quarter_pi",
            "Cl2(pi/4) = (sqrt2 psi'(1/8) - 2(sqrt2+1)pi^2 - 8(2sqrt2-1)G)/32",
            || clausen(2, PI / 4.0),
            |k| {
                Ok((SQRT_2 * k.trigamma_eighth
                    - 2.0 * (SQRT_2 + 1.0) * k.pi * k.pi
                    - 8.0 * (2.0 * SQRT_2 - 1.0) * k.catalan)
                    / 32.0)
            },
        ),
        sp("clausen3_pi", "Cl3(pi) = -3/4 zeta3", || clausen(3, PI), |k| Ok(-0.75 * z3(k))),
        sp("clausen5_pi", "Cl5(pi) = -15/16 zeta5", || clausen(5, PI), |k| Ok(-15.0 / 16.0 * z5(k))),
        sp("clausen3_two_pi", "Cl3(2pi) = zeta3", || clausen(3, 2.0 * PI), |k| Ok(z3(k))),
        sp("clausen5_two_pi", "Cl5(2pi) = zeta5", || clausen(5, 2.0 * PI), |k| Ok(z5(k))),
        sp(
            "clausen3_half_pi",
            "Cl3(pi/2) = (1/8)(1/4 - 1) zeta3",
            || clausen(3, PI / 2.0),
            |k| Ok(0.125 * (0.25 - 1.0) * z3(k)),
        ),
        sp(
            "clausen3_third_pi",
            "Cl3(pi/3) = (1/2)(1/4 - 1)(1/9 - 1) zeta3",
            || clausen(3, PI / 3.0),
            |k| Ok(0.5 * (0.25 - 1.0) * (1.0 / 9.0 - 1.0) * z3(k)),
        ),
        sp(
            "clausen3_two_third_pi",
            "Cl3(2pi/3) = (1/2)(1/9 - 1) zeta3",
            || clausen(3, 2.0 * PI / 3.0),
            |k| Ok(0.5 * (1.0 / 9.0 - 1.0) * z3(k)),
        ),
        sp("polylog2_one", "Li2(1) = zeta(2)", || polylog(2, 1.0), |k| table_zeta(k, 2)),
        sp("polylog3_one", "Li3(1) = zeta(3)", || polylog(3, 1.0), |k| table_zeta(k, 3)),
        sp("polylog4_one", "Li4(1) = zeta(4)", || polylog(4, 1.0), |k| table_zeta(k, 4)),
        sp("polylog5_one", "Li5(1) = zeta(5)", || polylog(5, 1.0), |k| table_zeta(k, 5)),
        sp("polylog2_minus_one", "Li2(-1) = -pi^2/12", || polylog(2, -1.0), |k| Ok(-k.pi * k.pi / 12.0)),
        sp("polylog3_minus_one", "Li3(-1) = -3/4 zeta3", || polylog(3, -1.0), |k| Ok(-0.75 * z3(k))),
        sp("polylog4_minus_one", "Li4(-1) = -7/8 zeta4", || polylog(4, -1.0), |k| Ok(-0.875 * k.zeta_even[1])),
    ]
}

/// Special-function values against exact expressions over the constants.
pub(super) fn special_value_entries() -> Vec<Identity> {
    specials()
        .into_iter()
        .map(|s| Identity {
            id: format!("special_{}", s.id),
            suite: Suite::SpecialValues,
            formula: s.text.to_string(),
            closed: None,
            points: vec![CheckPoint {
                params: Params::default(),
                closed: Quantity::Computed(Computed { text: s.text, eval: s.computed }),
                oracle: Quantity::Expression(Expression { text: s.text, eval: s.exact, ops: 8 }),
            }],
            tolerance_scale: 1.0,
        })
        .collect()
}
