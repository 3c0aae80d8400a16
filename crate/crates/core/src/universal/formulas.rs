//! Closed-form universal characters as [`SinhProduct`]s.

use num_traits::Zero;

use super::forms::{LinearForm, SinhProduct};
use super::params::{exc_line_point, Perm, Slot, VogelParams};
use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::series::PowerSeries;

const A: LinearForm = LinearForm::ALPHA;
const B: LinearForm = LinearForm::BETA;
const G: LinearForm = LinearForm::GAMMA;

fn product(factors: impl IntoIterator<Item = (LinearForm, LinearForm)>) -> SinhProduct {
    let (nums, dens) = factors.into_iter().unzip();
    SinhProduct::from_forms(nums, dens)
}

/// Character of the adjoint representation.
pub fn adjoint() -> SinhProduct {
    product([(G + 2 * B + 2 * A, G), (2 * G + B + 2 * A, B), (2 * G + 2 * B + A, A)]).negated()
}

/// The border factor of the `n`-th Cartan power, with the roles of the
/// parameters given by forms `(a, b, g)`.
fn border(n: u32, a: LinearForm, b: LinearForm, g: LinearForm) -> SinhProduct {
    product((1..=n as i64).flat_map(|i| {
        [
            (g + 2 * b - (i - 3) * a, g - (i - 1) * a),
            (2 * g + b - (i - 3) * a, b - (i - 1) * a),
            (2 * g + 2 * b - (i - 4) * a, -i * a),
        ]
    }))
}

/// Character of the `n`-th Cartan power of the adjoint (highest weight `nθ`).
pub fn cartan_power(n: u32) -> SinhProduct {
    let n = n as i64;
    SinhProduct::ratio(2 * G + 2 * B - (2 * n - 3) * A, 2 * G + 2 * B + 3 * A).times(&border(n as u32, A, B, G))
}

/// Character of `Y₂(α)`; the other constituents come from [`Slot::perm`].
pub fn y2() -> SinhProduct {
    let t = A + B + G;
    product([
        (2 * t, A),
        (B - 2 * t, 2 * A),
        (G - 2 * t, B),
        (B + t, G),
        (G + t, A - B),
        (3 * A - 2 * t, A - G),
    ])
    .negated()
}

/// Character of `X₂`, the complement of the adjoint in `∧²𝔤`.
pub fn x2() -> SinhProduct {
    let t = A + B + G;
    product([A, B, G].into_iter().flat_map(|u| [(2 * t - u, u), (t + u, 2 * u), (2 * (t - u), t - u)]))
}

pub fn block_a(n: u32) -> SinhProduct {
    product((1..=n as i64).flat_map(|i| {
        [
            (2 * G + (3 - i) * A, 2 * B + (1 - i) * A),
            (2 * G + B + (4 - i) * A, B - i * A),
            (2 * B + G + (3 - i) * A, G + (1 - i) * A),
        ]
    }))
}

pub fn block_c1(n: u32) -> SinhProduct {
    product((1..=n as i64).map(|i| (2 * B + 2 * G + (4 - i) * A, 2 * G + (3 - i) * A)))
}

pub fn block_c2(n: u32) -> SinhProduct {
    product((1..=n as i64).map(|i| ((i - 1) * A - 2 * B, i * A)))
}

pub fn block_f(k: u32, l: u32) -> SinhProduct {
    let (k, l) = (k as i64, l as i64);
    product([
        (2 * B + 2 * G + (3 - 2 * k - 2 * l) * A, 2 * B + 2 * G + 3 * A),
        (2 * G + (3 - 2 * l) * A, 2 * G + 3 * A),
        (B + 2 * G + (3 - k - 2 * l) * A, B + 2 * G + 3 * A),
        (B - k * A, B),
    ])
}

/// The border factor with `γ` replaced by `γ − β`.
pub fn block_btilde(l: u32) -> SinhProduct {
    border(l, A, B, G - B)
}

/// Character of the Cartan product `𝔤ᵏ Y₂(β)ˡ`, highest weight `(k+l)θ + lσ`.
pub fn z(k: u32, l: u32) -> SinhProduct {
    block_f(k, l)
        .times(&block_a(k + l))
        .times(&block_btilde(l))
        .times(&block_c1(k + 2 * l))
        .times(&block_c2(k))
}

/// The universal representations with closed-form characters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Representation {
    Trivial,
    Adjoint,
    CartanPower(u32),
    Y2(Slot),
    X2,
    Z { k: u32, l: u32 },
}

impl Representation {
    pub fn formula(self) -> SinhProduct {
        match self {
            Representation::Trivial => SinhProduct::one(),
            Representation::Adjoint => adjoint(),
            Representation::CartanPower(n) => cartan_power(n),
            Representation::Y2(slot) => y2().permuted(slot.perm()),
            Representation::X2 => x2(),
            Representation::Z { k, l } => z(k, l),
        }
    }

    pub fn name(self) -> String {
        match self {
            Representation::Trivial => "1".into(),
            Representation::Adjoint => "g".into(),
            Representation::CartanPower(n) => format!("g^{n}"),
            Representation::Y2(slot) => format!("Y2({})", slot.symbol()),
            Representation::X2 => "X2".into(),
            Representation::Z { k, l } => format!("Z({k},{l})"),
        }
    }
}

impl Slot {
    pub fn symbol(self) -> char {
        match self {
            Slot::Alpha => 'α',
            Slot::Beta => 'β',
            Slot::Gamma => 'γ',
        }
    }
}

/// Series of `rep` at `v`, strict about parameter-space poles.
pub fn qdim(v: &VogelParams, rep: Representation, order: usize) -> Result<PowerSeries> {
    rep.formula().series(v, order)
}

pub fn qdim_adjoint(v: &VogelParams, order: usize) -> Result<PowerSeries> {
    qdim(v, Representation::Adjoint, order)
}

pub fn qdim_cartan_adjoint(v: &VogelParams, n: u32, order: usize) -> Result<PowerSeries> {
    qdim(v, Representation::CartanPower(n), order)
}

pub fn qdim_y2(v: &VogelParams, slot: Slot, order: usize) -> Result<PowerSeries> {
    qdim(v, Representation::Y2(slot), order)
}

pub fn qdim_x2(v: &VogelParams, order: usize) -> Result<PowerSeries> {
    qdim(v, Representation::X2, order)
}

pub fn qdim_z(v: &VogelParams, k: u32, l: u32, order: usize) -> Result<PowerSeries> {
    qdim(v, Representation::Z { k, l }, order)
}

pub fn z_block_a(v: &VogelParams, n: u32, order: usize) -> Result<PowerSeries> {
    block_a(n).series(v, order)
}

pub fn z_block_c1(v: &VogelParams, n: u32, order: usize) -> Result<PowerSeries> {
    block_c1(n).series(v, order)
}

pub fn z_block_c2(v: &VogelParams, n: u32, order: usize) -> Result<PowerSeries> {
    block_c2(n).series(v, order)
}

pub fn z_block_f(v: &VogelParams, k: u32, l: u32, order: usize) -> Result<PowerSeries> {
    block_f(k, l).series(v, order)
}

pub fn z_block_btilde(v: &VogelParams, l: u32, order: usize) -> Result<PowerSeries> {
    block_btilde(l).series(v, order)
}

/// Dimension of the adjoint, `(α−2t)(β−2t)(γ−2t)/(αβγ)`.
pub fn dim_adjoint(v: &VogelParams) -> Result<Rational> {
    for (form, val) in [A, B, G].into_iter().zip(v.as_array()) {
        if val.is_zero() {
            return Err(Error::PoleAtParameters { form, at: v.to_string() });
        }
    }
    let two_t = int(2) * v.t();
    let num: Rational = v.as_array().into_iter().map(|x| x - &two_t).product();
    Ok(num / v.p())
}

/// Casimir eigenvalue on the adjoint.
pub fn casimir_adjoint(v: &VogelParams) -> Rational {
    int(2) * v.t()
}

/// Casimir eigenvalue on `Y₂` of the given slot.
pub fn casimir_y2(v: &VogelParams, slot: Slot) -> Rational {
    int(4) * v.t() - int(2) * slot.value(v)
}

/// Dimension of `Z(k, l)` at the exceptional-line point `(λ, 1−λ, 2)`.
pub fn exc_line_dim(lambda: &Rational, k: u32, l: u32) -> Result<Rational> {
    z(k, l).dimension(&exc_line_point(lambda))
}

/// Convenience: a formula evaluated at permuted parameters.
pub fn permuted_series(rep: Representation, v: &VogelParams, perm: Perm, order: usize) -> Result<PowerSeries> {
    rep.formula().series(&v.permuted(perm), order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use crate::series::sinh_ratio_series;
    use crate::universal::params::{vogel_params, AlgebraId};

    fn generic() -> VogelParams {
        VogelParams::new(frac(-7, 3), int(11), frac(5, 2)).unwrap()
    }

    fn dim(id: AlgebraId, rep: Representation) -> Rational {
        rep.formula().dimension(&vogel_params(id).unwrap()).unwrap()
    }

    #[test]
    fn adjoint_dimensions() {
        let expected = [35, 21, 21, 66, 14, 52, 78, 133, 248];
        for (id, d) in AlgebraId::SAMPLES.into_iter().zip(expected) {
            let v = vogel_params(id).unwrap();
            assert_eq!(dim_adjoint(&v).unwrap(), int(d), "{id}");
            assert_eq!(dim(id, Representation::Adjoint), int(d), "{id}");
        }
    }

    #[test]
    fn adjoint_of_sl2() {
        let v = VogelParams::from_ints(-2, 2, 2).unwrap();
        let expected = sinh_ratio_series(&int(6), &int(2), 12).unwrap();
        assert_eq!(qdim_adjoint(&v, 12).unwrap(), expected);
    }

    #[test]
    fn adjoint_pole() {
        let v = VogelParams::from_ints(0, 1, 1).unwrap();
        assert!(matches!(dim_adjoint(&v), Err(Error::PoleAtParameters { .. })));
        assert!(matches!(qdim_adjoint(&v, 4), Err(Error::PoleAtParameters { .. })));
    }

    #[test]
    fn casimirs() {
        let e7 = vogel_params(AlgebraId::E7).unwrap();
        assert_eq!(casimir_adjoint(&e7), int(36));
        let sl = VogelParams::from_ints(-2, 2, 9).unwrap();
        assert_eq!(casimir_y2(&sl, Slot::Alpha), int(4 * 9 + 4));
    }

    #[test]
    fn cartan_reductions() {
        let v = generic();
        assert_eq!(qdim_cartan_adjoint(&v, 0, 10).unwrap(), PowerSeries::one(10));
        assert_eq!(qdim_cartan_adjoint(&v, 1, 10).unwrap(), qdim_adjoint(&v, 10).unwrap());
        assert_eq!(qdim_cartan_adjoint(&v, 2, 10).unwrap(), qdim_y2(&v, Slot::Alpha, 10).unwrap());
        for n in 0..4 {
            assert_eq!(qdim_z(&v, n, 0, 10).unwrap(), qdim_cartan_adjoint(&v, n, 10).unwrap());
        }
    }

    #[test]
    fn table_values() {
        use Representation::*;
        let sl6 = AlgebraId::A(5);
        assert_eq!(dim(sl6, CartanPower(2)), int(405));
        assert_eq!(dim(sl6, CartanPower(3)), int(2695));
        assert_eq!(dim(sl6, Y2(Slot::Beta)), int(189));
        assert_eq!(dim(sl6, X2), int(560));
        assert_eq!(dim(sl6, Z { k: 1, l: 1 }), int(3675));
        assert_eq!(dim(AlgebraId::F4, CartanPower(3)), int(12376));
        assert_eq!(dim(AlgebraId::F4, X2), int(1274));
        assert_eq!(dim(AlgebraId::D(6), X2), int(2079));
        assert_eq!(dim(AlgebraId::D(6), Z { k: 1, l: 1 }), int(21021));
    }

    #[test]
    fn blocks() {
        let v = generic();
        assert_eq!(z_block_a(&v, 0, 6).unwrap(), PowerSeries::one(6));
        assert_eq!(z_block_c1(&v, 0, 6).unwrap(), PowerSeries::one(6));
        assert_eq!(z_block_c2(&v, 0, 6).unwrap(), PowerSeries::one(6));
        assert_eq!(z_block_btilde(&v, 0, 6).unwrap(), PowerSeries::one(6));
        let c2 = z_block_c2(&v, 1, 8).unwrap();
        let expected = sinh_ratio_series(&(int(-2) * v.beta()), v.alpha(), 8).unwrap();
        assert_eq!(c2, expected);
        let shifted = VogelParams::new(v.alpha().clone(), v.beta().clone(), v.gamma() - v.beta()).unwrap();
        assert_eq!(z_block_btilde(&v, 1, 8).unwrap(), border(1, A, B, G).series(&shifted, 8).unwrap());
        assert_eq!(qdim_z(&v, 0, 0, 6).unwrap(), PowerSeries::one(6));
    }

    #[test]
    fn g2_vanishing() {
        let g2 = vogel_params(AlgebraId::G2).unwrap();
        for k in 0..4 {
            for l in 2..4 {
                assert!(qdim_z(&g2, k, l, 8).unwrap().is_zero(), "k={k} l={l}");
            }
        }
    }

    #[test]
    fn exc_line_j() {
        let j = |l: Rational| {
            let one = int(1);
            let num = int(81)
                * (&l - int(6))
                * (&l - int(4))
                * (&l - int(3))
                * (&l + int(2))
                * (&l + int(3))
                * (&l + int(5))
                * (int(2) * &l - int(5))
                * (int(2) * &l + int(3));
            let den = (&l - &one)
                * (&l - &one)
                * &l
                * &l
                * (int(2) * &l - &one)
                * (int(2) * &l - &one)
                * (int(3) * &l - int(2))
                * (int(3) * &l - &one);
            num / den
        };
        for lambda in [frac(7, 5), int(-3), frac(11, 7), frac(-9, 4)] {
            assert_eq!(exc_line_dim(&lambda, 0, 2).unwrap(), j(lambda.clone()), "{lambda}");
        }
    }
}
