use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{self, frac, int, Rational};
use crate::rootsys::{build_root_system, Family, RootSystem};

/// A point `(α, β, γ)` of Vogel's plane.
///
/// Only the ratios matter for characters up to rescaling of `x`, and
/// permutations relabel the `Y₂` constituents. The symmetric functions
/// `t, s, p` are always derived, never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VogelParams {
    alpha: Rational,
    beta: Rational,
    gamma: Rational,
}

impl VogelParams {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational) -> Result<Self> {
        if alpha.is_zero() && beta.is_zero() && gamma.is_zero() {
            return Err(Error::InvalidParams("(α, β, γ) = (0, 0, 0)".into()));
        }
        Ok(Self { alpha, beta, gamma })
    }

    pub fn from_ints(alpha: i64, beta: i64, gamma: i64) -> Result<Self> {
        Self::new(int(alpha), int(beta), int(gamma))
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    pub fn gamma(&self) -> &Rational {
        &self.gamma
    }

    pub fn as_array(&self) -> [&Rational; 3] {
        [&self.alpha, &self.beta, &self.gamma]
    }

    pub fn to_f64(&self) -> [f64; 3] {
        self.as_array().map(rational::to_f64)
    }

    pub fn t(&self) -> Rational {
        &self.alpha + &self.beta + &self.gamma
    }

    pub fn s(&self) -> Rational {
        &self.alpha * &self.beta + &self.beta * &self.gamma + &self.alpha * &self.gamma
    }

    pub fn p(&self) -> Rational {
        &self.alpha * &self.beta * &self.gamma
    }

    /// `(v[p₀], v[p₁], v[p₂])`.
    pub fn permuted(&self, perm: Perm) -> Self {
        let v = self.as_array();
        Self { alpha: v[perm.0[0]].clone(), beta: v[perm.0[1]].clone(), gamma: v[perm.0[2]].clone() }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        Self { alpha: &self.alpha * c, beta: &self.beta * c, gamma: &self.gamma * c }
    }

    pub fn to_strings(&self) -> [String; 3] {
        self.as_array().map(rational::format)
    }
}

impl fmt::Display for VogelParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, {}, {}", self.alpha, self.beta, self.gamma)
    }
}

/// A relabeling of the three parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Perm(pub [usize; 3]);

impl Perm {
    pub const IDENTITY: Perm = Perm([0, 1, 2]);

    pub const ALL: [Perm; 6] =
        [Perm([0, 1, 2]), Perm([0, 2, 1]), Perm([1, 0, 2]), Perm([1, 2, 0]), Perm([2, 0, 1]), Perm([2, 1, 0])];

    pub fn name(self) -> String {
        let sym = ['α', 'β', 'γ'];
        format!("({},{},{})", sym[self.0[0]], sym[self.0[1]], sym[self.0[2]])
    }
}

/// One of the three parameters, used to pick a `Y₂` constituent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Slot {
    Alpha,
    Beta,
    Gamma,
}

impl Slot {
    pub const ALL: [Slot; 3] = [Slot::Alpha, Slot::Beta, Slot::Gamma];

    /// Permutation moving this slot into the α position.
    pub fn perm(self) -> Perm {
        match self {
            Slot::Alpha => Perm([0, 1, 2]),
            Slot::Beta => Perm([1, 0, 2]),
            Slot::Gamma => Perm([2, 1, 0]),
        }
    }

    pub fn value(self, v: &VogelParams) -> &Rational {
        match self {
            Slot::Alpha => v.alpha(),
            Slot::Beta => v.beta(),
            Slot::Gamma => v.gamma(),
        }
    }
}

impl FromStr for Slot {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "alpha" | "a" | "α" => Ok(Slot::Alpha),
            "beta" | "b" | "β" => Ok(Slot::Beta),
            "gamma" | "g" | "c" | "γ" => Ok(Slot::Gamma),
            _ => Err(Error::InvalidParams(format!("unknown slot `{s}`"))),
        }
    }
}

/// A simple Lie algebra by Cartan type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraId {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl AlgebraId {
    /// The nine algebras used throughout the test tables.
    pub const SAMPLES: [AlgebraId; 9] = [
        AlgebraId::A(5),
        AlgebraId::B(3),
        AlgebraId::C(3),
        AlgebraId::D(6),
        AlgebraId::G2,
        AlgebraId::F4,
        AlgebraId::E6,
        AlgebraId::E7,
        AlgebraId::E8,
    ];

    pub fn family_rank(self) -> (Family, usize) {
        match self {
            AlgebraId::A(n) => (Family::A, n),
            AlgebraId::B(n) => (Family::B, n),
            AlgebraId::C(n) => (Family::C, n),
            AlgebraId::D(n) => (Family::D, n),
            AlgebraId::G2 => (Family::G, 2),
            AlgebraId::F4 => (Family::F, 4),
            AlgebraId::E6 => (Family::E, 6),
            AlgebraId::E7 => (Family::E, 7),
            AlgebraId::E8 => (Family::E, 8),
        }
    }

    pub fn root_system(self) -> Result<RootSystem> {
        let (family, rank) = self.family_rank();
        build_root_system(family, rank)
    }

    /// The classical or exceptional line through this algebra's point.
    pub fn line(self) -> LineId {
        match self {
            AlgebraId::A(n) => LineId::Sl(int(n as i64 + 1)),
            AlgebraId::B(n) => LineId::So(int(2 * n as i64 + 1)),
            AlgebraId::C(n) => LineId::Sp(int(2 * n as i64)),
            AlgebraId::D(n) => LineId::So(int(2 * n as i64)),
            AlgebraId::G2 => LineId::Exc(frac(-2, 3)),
            AlgebraId::F4 => LineId::Exc(int(1)),
            AlgebraId::E6 => LineId::Exc(int(2)),
            AlgebraId::E7 => LineId::Exc(int(4)),
            AlgebraId::E8 => LineId::Exc(int(8)),
        }
    }

    fn validate(self) -> Result<Self> {
        let (family, rank) = self.family_rank();
        if family.valid_rank(rank) {
            Ok(self)
        } else {
            Err(Error::UnknownAlgebra(self.to_string()))
        }
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AlgebraId::A(n) => write!(f, "sl{}", n + 1),
            AlgebraId::B(n) => write!(f, "so{}", 2 * n + 1),
            AlgebraId::C(n) => write!(f, "sp{}", 2 * n),
            AlgebraId::D(n) => write!(f, "so{}", 2 * n),
            AlgebraId::G2 => write!(f, "g2"),
            AlgebraId::F4 => write!(f, "f4"),
            AlgebraId::E6 => write!(f, "e6"),
            AlgebraId::E7 => write!(f, "e7"),
            AlgebraId::E8 => write!(f, "e8"),
        }
    }
}

impl FromStr for AlgebraId {
    type Err = Error;

    /// Accepts `e8`, `g2`, `sl 6` / `sl6` (= A₅), `so 12` (= D₆), `so 7`
    /// (= B₃), `sp 6` (= C₃), and Cartan names such as `A5`.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownAlgebra(s.to_string());
        let compact: String =
            s.chars().filter(|c| !c.is_whitespace() && *c != '_' && *c != '(' && *c != ')').collect();
        let lower = compact.to_ascii_lowercase();
        let split = lower.find(|c: char| c.is_ascii_digit()).ok_or_else(unknown)?;
        let (head, digits) = lower.split_at(split);
        let n: usize = digits.parse().map_err(|_| unknown())?;
        let id = match head {
            "sl" | "su" if n >= 2 => AlgebraId::A(n - 1),
            "so" if n >= 5 && n % 2 == 1 => AlgebraId::B((n - 1) / 2),
            "so" if n >= 6 && n.is_multiple_of(2) => AlgebraId::D(n / 2),
            "sp" if n >= 4 && n.is_multiple_of(2) => AlgebraId::C(n / 2),
            "a" => AlgebraId::A(n),
            "b" => AlgebraId::B(n),
            "c" => AlgebraId::C(n),
            "d" => AlgebraId::D(n),
            "g" if n == 2 => AlgebraId::G2,
            "f" if n == 4 => AlgebraId::F4,
            "e" if n == 6 => AlgebraId::E6,
            "e" if n == 7 => AlgebraId::E7,
            "e" if n == 8 => AlgebraId::E8,
            _ => return Err(unknown()),
        };
        id.validate().map_err(|_| unknown())
    }
}

/// Vogel's parameters with the normalization α = −2 (long roots of square 2).
pub fn vogel_params(id: AlgebraId) -> Result<VogelParams> {
    let id = id.validate()?;
    let (beta, gamma) = match id {
        AlgebraId::A(n) => (int(2), int(n as i64 + 1)),
        AlgebraId::B(n) => (int(4), int(2 * n as i64 - 3)),
        AlgebraId::C(n) => (int(1), int(n as i64 + 2)),
        AlgebraId::D(n) => (int(4), int(2 * n as i64 - 4)),
        AlgebraId::G2 => (frac(10, 3), frac(8, 3)),
        AlgebraId::F4 => (int(5), int(6)),
        AlgebraId::E6 => (int(6), int(8)),
        AlgebraId::E7 => (int(8), int(12)),
        AlgebraId::E8 => (int(12), int(20)),
    };
    VogelParams::new(int(-2), beta, gamma)
}

/// The one-parameter families of Vogel's plane containing the simple
/// algebras: `sl_N`, `so_N`, `sp_N` and the exceptional line `Exc(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LineId {
    Sl(Rational),
    So(Rational),
    Sp(Rational),
    Exc(Rational),
}

impl LineId {
    /// Derivative of [`line_params`] with respect to the line parameter.
    pub fn direction(&self) -> VogelParams {
        let (b, g) = match self {
            LineId::Sl(_) | LineId::So(_) => (int(0), int(1)),
            LineId::Sp(_) => (int(0), frac(1, 2)),
            LineId::Exc(_) => (int(1), int(2)),
        };
        VogelParams::new(int(0), b, g).expect("nonzero direction")
    }

    /// Whether `v` satisfies this line's equation (scale-invariant).
    pub fn contains(&self, v: &VogelParams) -> bool {
        let (a, b, g) = (v.alpha(), v.beta(), v.gamma());
        match self {
            LineId::Sl(_) => (a + b).is_zero(),
            LineId::So(_) => (int(2) * a + b).is_zero(),
            LineId::Sp(_) => (a + int(2) * b).is_zero(),
            LineId::Exc(_) => (g - int(2) * (a + b)).is_zero(),
        }
    }
}

/// Parametrized points of the lines, with α = −2.
///
/// The exceptional line is returned as `(−2, n+4, 2n+4)`, which satisfies
/// `γ = 2(α+β)` and reproduces the ordering used for the exceptional algebras
/// (`n = −2/3, 1, 2, 4, 8` for g₂, f₄, e₆, e₇, e₈).
pub fn line_params(line: &LineId) -> VogelParams {
    let (beta, gamma) = match line {
        LineId::Sl(n) => (int(2), n.clone()),
        LineId::So(n) => (int(4), n - int(4)),
        LineId::Sp(n) => (int(1), n / int(2) + int(2)),
        LineId::Exc(n) => (n + int(4), int(2) * n + int(4)),
    };
    VogelParams::new(int(-2), beta, gamma).expect("α = −2")
}

/// The exceptional line parametrized as `(λ, 1−λ, 2)`.
pub fn exc_line_point(lambda: &Rational) -> VogelParams {
    VogelParams::new(lambda.clone(), int(1) - lambda, int(2)).expect("γ = 2")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_rows() {
        let e8 = vogel_params(AlgebraId::E8).unwrap();
        assert_eq!(e8, VogelParams::from_ints(-2, 12, 20).unwrap());
        assert_eq!(e8.t(), int(30));
        let g2 = vogel_params(AlgebraId::G2).unwrap();
        assert_eq!(g2, VogelParams::new(int(-2), frac(10, 3), frac(8, 3)).unwrap());
        assert_eq!(g2.t(), int(4));
        for n in 1..8 {
            assert_eq!(vogel_params(AlgebraId::A(n)).unwrap(), VogelParams::from_ints(-2, 2, n as i64 + 1).unwrap());
        }
    }

    #[test]
    fn t_is_dual_coxeter_number() {
        let expected = [6, 5, 4, 10, 4, 9, 12, 18, 30];
        for (id, h) in AlgebraId::SAMPLES.iter().zip(expected) {
            assert_eq!(vogel_params(*id).unwrap().t(), int(h), "{id}");
        }
    }

    #[test]
    fn vieta_relations() {
        let v = VogelParams::new(frac(1, 3), int(-5), frac(7, 2)).unwrap();
        // (ψ−α)(ψ−β)(ψ−γ) = ψ³ − tψ² + sψ − p vanishes at each root
        for root in v.as_array() {
            let val = root * root * root - v.t() * root * root + v.s() * root - v.p();
            assert!(val.is_zero());
        }
    }

    #[test]
    fn rejects_origin() {
        assert!(VogelParams::from_ints(0, 0, 0).is_err());
    }

    #[test]
    fn line_points_lie_on_their_lines() {
        for n in [int(3), frac(7, 2), int(-5)] {
            for line in [LineId::Sl(n.clone()), LineId::So(n.clone()), LineId::Sp(n.clone()), LineId::Exc(n.clone())] {
                assert!(line.contains(&line_params(&line)), "{line:?}");
            }
        }
        assert_eq!(line_params(&LineId::So(int(12))), VogelParams::from_ints(-2, 4, 8).unwrap());
        let exc = line_params(&LineId::Exc(int(8)));
        assert_eq!(exc, VogelParams::from_ints(-2, 12, 20).unwrap());
        assert!(LineId::Exc(int(0)).contains(&exc_line_point(&frac(3, 7))));
    }

    #[test]
    fn algebra_lines_pass_through_table_points() {
        for id in AlgebraId::SAMPLES {
            assert_eq!(line_params(&id.line()), vogel_params(id).unwrap(), "{id}");
        }
    }

    #[test]
    fn parses_algebra_names() {
        assert_eq!("e8".parse::<AlgebraId>().unwrap(), AlgebraId::E8);
        assert_eq!("sl 6".parse::<AlgebraId>().unwrap(), AlgebraId::A(5));
        assert_eq!("sl6".parse::<AlgebraId>().unwrap(), AlgebraId::A(5));
        assert_eq!("so 12".parse::<AlgebraId>().unwrap(), AlgebraId::D(6));
        assert_eq!("so7".parse::<AlgebraId>().unwrap(), AlgebraId::B(3));
        assert_eq!("sp 6".parse::<AlgebraId>().unwrap(), AlgebraId::C(3));
        assert_eq!("F4".parse::<AlgebraId>().unwrap(), AlgebraId::F4);
        assert_eq!("A5".parse::<AlgebraId>().unwrap(), AlgebraId::A(5));
        assert!("e9".parse::<AlgebraId>().is_err());
        assert!("so 4".parse::<AlgebraId>().is_err());
        assert!("sp 5".parse::<AlgebraId>().is_err());
        assert!("xyz".parse::<AlgebraId>().is_err());
        assert_eq!(AlgebraId::D(6).to_string(), "so12");
    }

    #[test]
    fn permutation_and_slots() {
        let v = VogelParams::from_ints(-2, 5, 6).unwrap();
        assert_eq!(v.permuted(Perm([2, 1, 0])), VogelParams::from_ints(6, 5, -2).unwrap());
        assert_eq!(v.permuted(Slot::Beta.perm()).alpha(), &int(5));
        assert_eq!("gamma".parse::<Slot>().unwrap(), Slot::Gamma);
    }
}
