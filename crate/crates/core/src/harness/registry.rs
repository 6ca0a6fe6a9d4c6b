//! The table of checks: which quantities are compared, at which points.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::closedform::{ClosedFormId, ClosedForms};
use crate::error::{domain, Error, Result};
use crate::evaluation::{Evaluation, EPS};
use crate::oracle::{Family, SeriesSpec, SignConvention};
use crate::sequences::BINET;
use crate::specfun::ConstantsTable;

use super::catalog;

/// Groups of checks that can be run together.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Suite {
    /// Single- and two-parameter identities, Clausen and half-integer forms.
    Core,
    /// Individual constants against the brute-force sums.
    Examples,
    /// Fibonacci- and Lucas-weighted series.
    Fibonacci,
    /// Bernoulli-number series.
    Bernoulli,
    /// Extra powers of k in the denominator.
    General,
    /// Tabulated Clausen and polylogarithm values.
    SpecialValues,
    /// Everything above.
    All,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Core,
        Suite::Examples,
        Suite::Fibonacci,
        Suite::Bernoulli,
        Suite::General,
        Suite::SpecialValues,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Examples => "examples",
            Suite::Fibonacci => "fibonacci",
            Suite::Bernoulli => "bernoulli",
            Suite::General => "general",
            Suite::SpecialValues => "special_values",
            Suite::All => "all",
        }
    }

    /// Whether an identity registered under `member` runs in this suite.
    pub fn contains(self, member: Suite) -> bool {
        self == Suite::All || self == member
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        Suite::ALL.iter().copied().find(|suite| suite.name() == key).ok_or_else(|| {
            let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
            domain(format!("unknown suite `{s}`; expected one of {}", names.join(", ")))
        })
    }
}

/// A value given as an expression over the constants table.
#[derive(Clone, Copy)]
pub struct Expression {
    /// Human-readable form, e.g. "ln(pi) - 1".
    pub text: &'static str,
    pub eval: fn(&ConstantsTable) -> Result<f64>,
    /// Rough count of rounding steps, scaling the error bound.
    pub ops: u32,
}

impl Expression {
    pub fn evaluate(&self, consts: &ConstantsTable) -> Result<Evaluation> {
        let v = (self.eval)(consts)?;
        Ok(Evaluation::new(v, 4.0 * self.ops as f64 * EPS * v.abs().max(1.0), 0))
    }
}

impl fmt::Debug for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Expression").field("text", &self.text).finish()
    }
}

/// A special-function value computed by the library.
#[derive(Clone, Copy)]
pub struct Computed {
    pub text: &'static str,
    pub eval: fn() -> Result<Evaluation>,
}

impl fmt::Debug for Computed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Computed").field("text", &self.text).finish()
    }
}

/// One side of a comparison.
#[derive(Debug, Clone, Copy)]
pub enum Quantity {
    /// The series value through a closed-form identity.
    Closed(ClosedFormId, SeriesSpec),
    /// The series value from the brute-force oracle.
    Oracle(SeriesSpec),
    /// A constant expression.
    Expression(Expression),
    /// A library special-function value.
    Computed(Computed),
}

/// Parameters of a grid point, for reports and ordering.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct Params {
    pub n: Option<u32>,
    pub m: Option<u32>,
    pub p: Option<u32>,
    pub z: Option<f64>,
}

impl Params {
    pub fn of(spec: &SeriesSpec) -> Self {
        Self { n: spec.n, m: spec.m, p: spec.p, z: Some(spec.z) }
    }

    /// Total order used to sort results.
    pub fn sort_key(&self) -> (u32, u32, u32, i64) {
        let z = self.z.map_or(i64::MIN, |z| {
            // Order-preserving integer image of the float.
            let b = z.to_bits() as i64;
            if b < 0 {
                i64::MIN - b
            } else {
                b
            }
        });
        (self.n.unwrap_or(0), self.m.unwrap_or(0), self.p.unwrap_or(0), z)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(n) = self.n {
            parts.push(format!("n={n}"));
        }
        if let Some(m) = self.m {
            parts.push(format!("m={m}"));
        }
        if let Some(p) = self.p {
            parts.push(format!("p={p}"));
        }
        if let Some(z) = self.z {
            parts.push(format!("z={}", super::report::format_float(z)));
        }
        f.write_str(&parts.join(";"))
    }
}

/// One comparison at one parameter point.
#[derive(Debug, Clone, Copy)]
pub struct CheckPoint {
    pub params: Params,
    /// The value claimed exact: a closed form or a constant expression.
    pub closed: Quantity,
    /// The independently computed value.
    pub oracle: Quantity,
}

/// A registry entry: one identity or constant checked over a grid.
#[derive(Debug, Clone)]
pub struct Identity {
    pub id: String,
    pub suite: Suite,
    /// The relation being checked, in plain text.
    pub formula: String,
    /// The closed-form identity exercised, if any.
    pub closed: Option<ClosedFormId>,
    pub points: Vec<CheckPoint>,
    /// Multiplier on the run tolerance for this entry.
    pub tolerance_scale: f64,
}

/// The canonical z grid: 0.1, 1/4, 1/2, 1/α, 0.95 and 1.
pub fn z_grid() -> [f64; 6] {
    [0.1, 0.25, 0.5, BINET.radius(), 0.95, 1.0]
}

/// All registered checks.
#[derive(Debug, Clone)]
pub struct Registry {
    identities: Vec<Identity>,
}

impl Registry {
    /// The built-in registry. Fails if some closed-form identity is missing.
    pub fn standard() -> Result<Self> {
        let mut identities = identity_entries();
        identities.extend(catalog::example_entries());
        identities.extend(catalog::special_value_entries());
        let registry = Self { identities };
        registry.check_complete()?;
        Ok(registry)
    }

    pub fn identities(&self) -> &[Identity] {
        &self.identities
    }

    /// Entries belonging to `suite`.
    pub fn suite(&self, suite: Suite) -> impl Iterator<Item = &Identity> {
        self.identities.iter().filter(move |i| suite.contains(i.suite))
    }

    /// Every [`ClosedFormId`] must be exercised by at least one grid point,
    /// and no entry may be empty.
    pub fn check_complete(&self) -> Result<()> {
        if let Some(empty) = self.identities.iter().find(|i| i.points.is_empty()) {
            return Err(Error::ContractViolation(format!("registry entry {} has an empty grid", empty.id)));
        }
        let missing: Vec<_> = ClosedFormId::ALL
            .iter()
            .filter(|id| !self.identities.iter().any(|i| i.closed == Some(**id)))
            .map(|id| id.name())
            .collect();
        if !missing.is_empty() {
            return Err(Error::ContractViolation(format!("no registry entry exercises {}", missing.join(", "))));
        }
        Ok(())
    }
}

/// A closed-form identity checked against the oracle over `specs`, keeping
/// only the points inside the series domain.
fn identity(suite: Suite, closed: ClosedFormId, specs: impl IntoIterator<Item = SeriesSpec>) -> Identity {
    let points = specs
        .into_iter()
        .filter(|s| s.validate().is_ok())
        .map(|s| CheckPoint {
            params: Params::of(&s),
            closed: Quantity::Closed(closed, s),
            oracle: Quantity::Oracle(s),
        })
        .collect();
    Identity {
        id: closed.name().to_string(),
        suite,
        formula: closed.formula().to_string(),
        closed: Some(closed),
        points,
        tolerance_scale: 1.0,
    }
}

fn over_n(family: Family, sign: SignConvention, zs: &[f64], n_of: impl Fn(u32) -> u32) -> Vec<SeriesSpec> {
    let mut out = Vec::new();
    for n in 1..=6 {
        for &z in zs {
            out.push(SeriesSpec::new(family, z, sign).with_n(n_of(n)));
        }
    }
    out
}

fn at_n(family: Family, sign: SignConvention, zs: &[f64], n: u32) -> Vec<SeriesSpec> {
    zs.iter().map(|&z| SeriesSpec::new(family, z, sign).with_n(n)).collect()
}

fn plain(family: Family, sign: SignConvention, zs: &[f64]) -> Vec<SeriesSpec> {
    zs.iter().map(|&z| SeriesSpec::new(family, z, sign)).collect()
}

fn pairs(filter: impl Fn(u32, u32) -> bool) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for m in 1..=6 {
        for n in 1..=6 {
            if m != n && filter(m, n) {
                out.push((m, n));
            }
        }
    }
    out
}

fn identity_entries() -> Vec<Identity> {
    use ClosedFormId as Id;
    use Family as F;
    use SignConvention::{Alternating as Alt, Positive as Pos};
    let zs = z_grid();
    let one = [1.0];
    let half = [0.5];
    let odd = |n: u32| 2 * n - 1;
    let same = |n: u32| n;

    let mut out = vec![
        identity(Suite::Core, Id::PolylogP, over_n(F::P, Alt, &zs, same)),
        identity(Suite::Core, Id::ClausenKKPlusN, over_n(F::KKPlusN, Pos, &zs, same)),
        identity(Suite::Core, Id::ClausenOddShift, over_n(F::P, Pos, &zs, odd)),
        identity(Suite::Core, Id::UnitKKPlusN, over_n(F::KKPlusN, Pos, &one, same)),
        identity(Suite::Core, Id::UnitOddShift, over_n(F::P, Pos, &one, odd)),
        identity(Suite::Core, Id::HalfKKPlusN, over_n(F::KKPlusN, Pos, &half, same)),
        identity(Suite::Core, Id::HalfOddShift, over_n(F::P, Pos, &half, odd)),
        identity(Suite::Core, Id::ClausenOddDenominator, at_n(F::P, Pos, &zs, 1)),
        identity(Suite::Core, Id::ClausenKKPlusOne, at_n(F::KKPlusN, Pos, &zs, 1)),
        identity(Suite::Core, Id::DerivativeHalfInt, plain(F::HalfInt, Alt, &zs)),
        identity(Suite::Core, Id::ClausenHalfInt, plain(F::HalfInt, Pos, &zs)),
        identity(Suite::Core, Id::IntegratedHalfInt, plain(F::HalfIntKPlusOne, Alt, &zs)),
        identity(Suite::Core, Id::ClausenHalfIntKPlusOne, plain(F::HalfIntKPlusOne, Pos, &zs)),
    ];

    let pmn = |sign, zs: &[f64], filter: &dyn Fn(u32, u32) -> bool| {
        let mut specs = Vec::new();
        for (m, n) in pairs(filter) {
            for &z in zs {
                specs.push(SeriesSpec::new(F::Pmn, z, sign).with_m(m).with_n(n));
            }
        }
        specs
    };
    out.push(identity(Suite::Core, Id::PolylogPmn, pmn(Alt, &zs, &|_, _| true)));
    out.push(identity(Suite::Core, Id::UnitPmnSameParity, pmn(Pos, &one, &|m, n| m % 2 == n % 2)));
    out.push(identity(Suite::Core, Id::UnitPmnMixedParity, pmn(Pos, &one, &|m, n| m % 2 != n % 2)));
    let q_specs = (1..=6).flat_map(|m| zs.iter().map(move |&z| SeriesSpec::new(F::Q, z, Alt).with_m(m)));
    let mut q = identity(Suite::Core, Id::IncompleteGammaQ, q_specs);
    q.tolerance_scale = 10.0;
    out.push(q);

    // The Fibonacci series converge for |z| ≤ 1/α.
    let fz: Vec<f64> = zs.iter().copied().filter(|z| *z <= BINET.radius()).collect();
    out.push(identity(Suite::Fibonacci, Id::FibonacciPolylog, over_n(F::FibP, Alt, &fz, same)));
    out.push(identity(Suite::Fibonacci, Id::LucasPolylog, over_n(F::LucP, Alt, &fz, same)));
    out.push(identity(Suite::Fibonacci, Id::FibonacciOddDenominator, at_n(F::FibP, Pos, &fz, 1)));
    out.push(identity(Suite::Fibonacci, Id::LucasOddDenominator, at_n(F::LucP, Pos, &fz, 1)));
    out.push(identity(Suite::Fibonacci, Id::FibonacciKKPlusN, over_n(F::FibKKPlusN, Pos, &fz, same)));
    out.push(identity(Suite::Fibonacci, Id::LucasKKPlusN, over_n(F::LucKKPlusN, Pos, &fz, same)));
    out.push(identity(Suite::Fibonacci, Id::FibonacciOddShift, over_n(F::FibP, Pos, &fz, odd)));
    out.push(identity(Suite::Fibonacci, Id::LucasOddShift, over_n(F::LucP, Pos, &fz, odd)));

    // Bernoulli grids: the canonical points plus arguments out to 2π.
    let two_pi = 2.0 * std::f64::consts::PI;
    let log_z = [0.1, 0.25, 0.5, BINET.radius(), 0.95, 2.0, 10.0, 500.0];
    let wide = [0.1, 0.25, 0.5, BINET.radius(), 0.95, 1.0, 2.0, 3.0, 5.0, two_pi];
    let gen = [0.1, 0.25, 0.5, BINET.radius(), 0.95, 1.0, 2.0, 3.0, 5.0, 6.0];
    out.push(identity(Suite::Bernoulli, Id::BernoulliLogSeries, plain(F::BernoulliLog, Pos, &log_z)));
    out.push(identity(Suite::Bernoulli, Id::BernoulliOddSeries, plain(F::BernoulliOdd, Pos, &wide)));
    out.push(identity(Suite::Bernoulli, Id::BernoulliEvenSeries, plain(F::BernoulliEven, Pos, &wide)));
    out.push(identity(Suite::Bernoulli, Id::BernoulliGeneratingFunction, plain(F::BernoulliGenerating, Pos, &gen)));

    let mut ppow = Vec::new();
    let mut qpow = Vec::new();
    let mut pmnpow = Vec::new();
    for p in 1..=3 {
        for &z in &zs {
            for n in 1..=6 {
                ppow.push(SeriesSpec::new(F::Ppow, z, Alt).with_n(n).with_p(p));
                qpow.push(SeriesSpec::new(F::Qpow, z, Alt).with_m(n).with_p(p));
            }
            for (m, n) in pairs(|m, n| m < n) {
                pmnpow.push(SeriesSpec::new(F::Pmnpow, z, Alt).with_m(m).with_n(n).with_p(p));
            }
        }
    }
    out.push(identity(Suite::General, Id::RecursionPpow, ppow));
    out.push(identity(Suite::General, Id::RecursionPmnpow, pmnpow));
    let mut qpow = identity(Suite::General, Id::RecursionQpow, qpow);
    qpow.tolerance_scale = 10.0;
    out.push(qpow);
    out
}

/// Evaluates one side of a check.
pub fn evaluate(q: &Quantity, closed_forms: &ClosedForms<'_>, oracle_tol: f64) -> Result<Evaluation> {
    match q {
        Quantity::Closed(id, spec) => closed_forms.eval_identity(*id, spec),
        Quantity::Oracle(spec) => crate::oracle::sum_series(spec, oracle_tol),
        Quantity::Expression(e) => e.evaluate(closed_forms.constants()),
        Quantity::Computed(c) => (c.eval)(),
    }
}
