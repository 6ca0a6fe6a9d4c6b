//! Parameter records naming one series instance.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::sequences::BINET;

/// Series families. Unless noted, the k-th term is σ_k ζ(2k) z^{2k} r(k)
/// summed over k ≥ 1, where σ_k is (−1)^k or 1 by [`SignConvention`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    /// r = 1/(k(2k+n)).
    P,
    /// r = 1/(k(2k+m)(2k+n)), m ≠ n.
    Pmn,
    /// r = 1/(k(2k+m)²).
    Q,
    /// r = 1/k.
    S1,
    /// r = 1/(2k+n).
    S2,
    /// r = 1/(2k+m)².
    S3,
    /// r = 1/(k^p(2k+n)).
    Ppow,
    /// r = 1/(k^p(2k+m)(2k+n)).
    Pmnpow,
    /// r = 1/(k^p(2k+m)²).
    Qpow,
    /// r = 1/(k(k+n)).
    KKPlusN,
    /// r = 1/(2k+1).
    HalfInt,
    /// r = 1/((2k+1)(k+1)).
    HalfIntKPlusOne,
    /// Σ B_{2k} (ln z)^{2k+1}/(k(2k+1)!); z > 0 is the argument of the logarithm.
    BernoulliLog,
    /// Σ B_{2k} z^{2k+1}/(k(2k+1)!).
    BernoulliOdd,
    /// Σ B_{2k} z^{2k}/(k(2k)!).
    BernoulliEven,
    /// Σ_{k≥0} B_{2k} z^{2k}/(2k)!, the k = 0 term included.
    BernoulliGenerating,
    /// F_{2k}-weighted: σ_k F_{2k} ζ(2k) z^{2k}/(k(2k+n)).
    FibP,
    /// L_{2k}-weighted: σ_k L_{2k} ζ(2k) z^{2k}/(k(2k+n)).
    LucP,
    /// σ_k F_{2k} ζ(2k) z^{2k}/(k(k+n)).
    FibKKPlusN,
    /// σ_k L_{2k} ζ(2k) z^{2k}/(k(k+n)).
    LucKKPlusN,
    /// Σ_{t≥1} Li_p(−(z/t)²) = Σ_k (−1)^k ζ(2k) z^{2k}/k^p.
    DilogSum,
}

impl Family {
    pub const ALL: [Family; 21] = [
        Family::P,
        Family::Pmn,
        Family::Q,
        Family::S1,
        Family::S2,
        Family::S3,
        Family::Ppow,
        Family::Pmnpow,
        Family::Qpow,
        Family::KKPlusN,
        Family::HalfInt,
        Family::HalfIntKPlusOne,
        Family::BernoulliLog,
        Family::BernoulliOdd,
        Family::BernoulliEven,
        Family::BernoulliGenerating,
        Family::FibP,
        Family::LucP,
        Family::FibKKPlusN,
        Family::LucKKPlusN,
        Family::DilogSum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::P => "P",
            Family::Pmn => "Pmn",
            Family::Q => "Q",
            Family::S1 => "S1",
            Family::S2 => "S2",
            Family::S3 => "S3",
            Family::Ppow => "Ppow",
            Family::Pmnpow => "Pmnpow",
            Family::Qpow => "Qpow",
            Family::KKPlusN => "KKPlusN",
            Family::HalfInt => "HalfInt",
            Family::HalfIntKPlusOne => "HalfIntKPlusOne",
            Family::BernoulliLog => "BernoulliLog",
            Family::BernoulliOdd => "BernoulliOdd",
            Family::BernoulliEven => "BernoulliEven",
            Family::BernoulliGenerating => "BernoulliGenerating",
            Family::FibP => "FibP",
            Family::LucP => "LucP",
            Family::FibKKPlusN => "FibKKPlusN",
            Family::LucKKPlusN => "LucKKPlusN",
            Family::DilogSum => "DilogSum",
        }
    }

    /// Which of (n, m, p) the family reads.
    pub fn uses(self) -> (bool, bool, bool) {
        match self {
            Family::P | Family::S2 | Family::KKPlusN => (true, false, false),
            Family::FibP | Family::LucP | Family::FibKKPlusN | Family::LucKKPlusN => (true, false, false),
            Family::Pmn => (true, true, false),
            Family::Q | Family::S3 => (false, true, false),
            Family::Ppow => (true, false, true),
            Family::Pmnpow => (true, true, true),
            Family::Qpow => (false, true, true),
            Family::DilogSum => (false, false, true),
            Family::S1
            | Family::HalfInt
            | Family::HalfIntKPlusOne
            | Family::BernoulliLog
            | Family::BernoulliOdd
            | Family::BernoulliEven
            | Family::BernoulliGenerating => (false, false, false),
        }
    }

    pub fn is_bernoulli(self) -> bool {
        matches!(
            self,
            Family::BernoulliLog | Family::BernoulliOdd | Family::BernoulliEven | Family::BernoulliGenerating
        )
    }

    pub fn is_fibonacci(self) -> bool {
        matches!(self, Family::FibP | Family::LucP | Family::FibKKPlusN | Family::LucKKPlusN)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL.iter().copied().find(|f| f.name().eq_ignore_ascii_case(s)).ok_or_else(|| {
            let names: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
            domain(format!("unknown family `{s}`; expected one of {}", names.join(", ")))
        })
    }
}

/// Sign pattern σ_k of the series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SignConvention {
    /// σ_k = (−1)^k.
    Alternating,
    /// σ_k = 1.
    Positive,
}

impl SignConvention {
    pub fn sigma(self, k: usize) -> f64 {
        match self {
            SignConvention::Alternating if k % 2 == 1 => -1.0,
            _ => 1.0,
        }
    }
}

impl FromStr for SignConvention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "alternating" | "alt" => Ok(SignConvention::Alternating),
            "positive" | "pos" => Ok(SignConvention::Positive),
            _ => Err(domain(format!("unknown sign convention `{s}`; expected alternating or positive"))),
        }
    }
}

/// One series instance: family, integer parameters, argument and sign.
///
/// The sign convention is ignored by the Bernoulli families (their signs
/// come from B_{2k}) and by [`Family::DilogSum`], which is alternating.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesSpec {
    pub family: Family,
    pub n: Option<u32>,
    pub m: Option<u32>,
    pub p: Option<u32>,
    pub z: f64,
    pub sign: SignConvention,
}

impl SeriesSpec {
    pub fn new(family: Family, z: f64, sign: SignConvention) -> Self {
        Self { family, n: None, m: None, p: None, z, sign }
    }

    pub fn with_n(mut self, n: u32) -> Self {
        self.n = Some(n);
        self
    }

    pub fn with_m(mut self, m: u32) -> Self {
        self.m = Some(m);
        self
    }

    pub fn with_p(mut self, p: u32) -> Self {
        self.p = Some(p);
        self
    }

    pub fn with_z(mut self, z: f64) -> Self {
        self.z = z;
        self
    }

    /// P(n, z) with the given sign.
    pub fn p(n: u32, z: f64, sign: SignConvention) -> Self {
        Self::new(Family::P, z, sign).with_n(n)
    }

    pub(crate) fn need_n(&self) -> Result<u32> {
        self.n.ok_or_else(|| domain(format!("{} needs parameter n", self.family)))
    }

    pub(crate) fn need_m(&self) -> Result<u32> {
        self.m.ok_or_else(|| domain(format!("{} needs parameter m", self.family)))
    }

    pub(crate) fn need_p(&self) -> Result<u32> {
        self.p.ok_or_else(|| domain(format!("{} needs parameter p", self.family)))
    }

    /// Checks parameters and the convergence domain of the family.
    pub fn validate(&self) -> Result<()> {
        let (un, um, up) = self.family.uses();
        for (used, val, name) in [(un, self.n, "n"), (um, self.m, "m"), (up, self.p, "p")] {
            if used {
                match val {
                    None => return Err(domain(format!("{} needs parameter {name}", self.family))),
                    Some(0) => return Err(domain(format!("{} needs {name} >= 1", self.family))),
                    Some(_) => {}
                }
            }
        }
        if matches!(self.family, Family::Pmn | Family::Pmnpow) && self.n == self.m {
            return Err(domain("Pmn needs m != n; the equal case is the Q family"));
        }
        let z = self.z;
        if !z.is_finite() || z == 0.0 {
            return Err(domain(format!("z must be finite and nonzero, got {z}")));
        }
        let az = z.abs();
        match self.family {
            Family::BernoulliLog => {
                if z <= 0.0 || z == 1.0 {
                    return Err(domain(format!("BernoulliLog needs z > 0 and z != 1, got {z}")));
                }
                if z.ln().abs() > std::f64::consts::TAU * (1.0 + 1e-12) {
                    return Err(domain(format!("BernoulliLog needs |ln z| <= 2π, got {z}")));
                }
            }
            Family::BernoulliOdd | Family::BernoulliEven => {
                if az > std::f64::consts::TAU * (1.0 + 1e-12) {
                    return Err(domain(format!("{} needs 0 < |z| <= 2π, got {z}", self.family)));
                }
            }
            Family::BernoulliGenerating => {
                if az >= std::f64::consts::TAU {
                    return Err(domain(format!("BernoulliGenerating needs |z| < 2π, got {z}")));
                }
            }
            f if f.is_fibonacci() => {
                if az > BINET.radius() * (1.0 + 1e-12) {
                    return Err(domain(format!("{f} needs 0 < |z| <= 1/alpha = {}, got {z}", BINET.radius())));
                }
            }
            f => {
                if az > 1.0 {
                    return Err(domain(format!("{f} needs 0 < |z| <= 1, got {z}")));
                }
                if matches!(f, Family::Q | Family::Qpow) && z < 0.0 {
                    return Err(domain(format!("{f} is defined for 0 < z <= 1, got {z}")));
                }
                let harmonic_decay = matches!(f, Family::S1 | Family::S2 | Family::HalfInt);
                if harmonic_decay && self.sign == SignConvention::Positive && az >= 1.0 {
                    return Err(domain(format!("positive {f} diverges at |z| = 1")));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        for (name, v) in [("n", self.n), ("m", self.m), ("p", self.p)] {
            if let Some(v) = v {
                write!(f, " {name}={v}")?;
            }
        }
        write!(f, " z={} {:?}", self.z, self.sign)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert_eq!("pmn".parse::<Family>().unwrap(), Family::Pmn);
        assert!("nope".parse::<Family>().is_err());
    }

    #[test]
    fn validation_rules() {
        let alt = SignConvention::Alternating;
        assert!(SeriesSpec::p(1, 1.0, alt).validate().is_ok());
        assert!(SeriesSpec::p(1, 1.1, alt).validate().is_err());
        assert!(SeriesSpec::new(Family::P, 0.5, alt).validate().is_err());
        let pmn = SeriesSpec::new(Family::Pmn, 0.5, alt).with_m(2).with_n(2);
        assert!(pmn.validate().is_err());
        assert!(SeriesSpec::new(Family::Q, -0.5, alt).with_m(2).validate().is_err());
        let s1 = SeriesSpec::new(Family::S1, 1.0, SignConvention::Positive);
        assert!(s1.validate().is_err());
        assert!(SeriesSpec::new(Family::FibP, 0.62, alt).with_n(1).validate().is_err());
        assert!(SeriesSpec::new(Family::FibP, BINET.radius(), alt).with_n(1).validate().is_ok());
        assert!(SeriesSpec::new(Family::BernoulliGenerating, std::f64::consts::TAU, alt).validate().is_err());
        assert!(SeriesSpec::new(Family::BernoulliLog, 1.0, alt).validate().is_err());
    }
}
