//! The built-in inequalities.

use std::f64::consts::{FRAC_PI_2, PI};

use super::{
    AParam, Domain, EqPoint, Evaluation, InequalitySpec, KnownEquality, Parity, PointEval, ScanGrid,
};
use crate::chebyshev::{eval_lambda, integral_tu_weighted, integral_u_weighted, QuadratureConfig};
use crate::kernel::TuranParams;
use crate::sine_sums::{carslaw_sum, fejer_jackson_sum, TuranSum};

const ANGLE: Domain = Domain::Interval { lo: 0.0, hi: PI };
const ANGLE_2D: Domain = Domain::Square { lo: 0.0, hi: PI };
const CHEB: Domain = Domain::Interval { lo: -1.0, hi: 1.0 };

const REAL_A: AParam = AParam::Real { min: 1.0 };
const DEFAULT_A: [f64; 4] = [1.0, 1.5, 2.0, 5.0];

const STEPS_1D: usize = 1023;
const STEPS_2D: usize = 255;

fn ns(lo: usize, hi: usize) -> Vec<usize> {
    (lo..=hi).collect()
}

fn grid_1d() -> ScanGrid {
    ScanGrid::new(ns(1, 31), DEFAULT_A.to_vec(), STEPS_1D)
}

fn grid_2d() -> ScanGrid {
    ScanGrid::new(ns(1, 15), DEFAULT_A.to_vec(), STEPS_2D)
}

fn grid_integer_1d() -> ScanGrid {
    ScanGrid::new(ns(1, 31), vec![1.0, 2.0, 3.0, 5.0], STEPS_1D)
}

fn grid_integer_2d() -> ScanGrid {
    ScanGrid::new(ns(1, 15), vec![1.0, 2.0, 3.0, 5.0], STEPS_2D)
}

fn grid_eq13() -> ScanGrid {
    ScanGrid::new(ns(2, 31), vec![2.0, 3.0, 5.0], STEPS_1D)
}

fn grid_lambda() -> ScanGrid {
    ScanGrid::new(ns(0, 30), DEFAULT_A.to_vec(), STEPS_1D)
}

fn grid_cheb_integral() -> ScanGrid {
    ScanGrid::new(ns(0, 40), Vec::new(), STEPS_1D)
}

fn grid_classical() -> ScanGrid {
    ScanGrid::new(ns(0, 31), Vec::new(), STEPS_1D)
}

fn turan(n: usize, a: f64) -> TuranSum {
    // the registry only builds evaluators for n >= 1 and finite a
    TuranSum::new(TuranParams::new(n, a).expect("admissible Turán parameters"))
}

fn s_positive(n: usize, a: f64) -> PointEval {
    let t = turan(n, a);
    Box::new(move |x, _| Evaluation::at_least(t.s(x), 0.0))
}

fn s_over_parabola(n: usize, a: f64) -> PointEval {
    let t = turan(n, a);
    Box::new(move |x, _| Evaluation::at_least(t.s(x), x * (PI - x) / PI))
}

fn s_over_min_bound(n: usize, a: f64) -> PointEval {
    let t = turan(n, a);
    Box::new(move |x, _| {
        let bound = x.sin() * f64::min(1.0, 2.0 * (1.0 + x.cos()));
        Evaluation::at_least(t.s(x), bound)
    })
}

fn s_over_sin(n: usize, a: f64) -> PointEval {
    let t = turan(n, a);
    Box::new(move |x, _| Evaluation::at_least(t.s(x), x.sin()))
}

fn s_over_even_bound(n: usize, a: f64) -> PointEval {
    let t = turan(n, a);
    Box::new(move |x, _| Evaluation::at_least(t.s(x), 2.0 * x.sin() * (1.0 + x.cos())))
}

fn s_star_over_sin(n: usize, a: f64) -> PointEval {
    let t = turan(n, a);
    Box::new(move |x, _| Evaluation::at_least(t.s_star(x), x.sin()))
}

fn s_star_over_two_sin(n: usize, a: f64) -> PointEval {
    let t = turan(n, a);
    Box::new(move |x, _| Evaluation::at_least(t.s_star(x), 2.0 * x.sin()))
}

fn theta_positive(n: usize, a: f64) -> PointEval {
    let t = turan(n, a);
    Box::new(move |x, y| Evaluation::at_least(t.theta(x, y), 0.0))
}

fn theta_over_product(n: usize, a: f64) -> PointEval {
    let t = turan(n, a);
    Box::new(move |x, y| Evaluation::at_least(t.theta(x, y), x.sin() * y.sin()))
}

fn theta_over_even_bound(n: usize, a: f64) -> PointEval {
    let t = turan(n, a);
    Box::new(move |x, y| {
        let bound = 2.0 * x.sin() * y.sin() * (1.0 + x.cos() * y.cos());
        Evaluation::at_least(t.theta(x, y), bound)
    })
}

fn theta_star_over_product(n: usize, a: f64) -> PointEval {
    let t = turan(n, a);
    Box::new(move |x, y| Evaluation::at_least(t.theta_star(x, y), x.sin() * y.sin()))
}

fn theta_star_over_two_product(n: usize, a: f64) -> PointEval {
    let t = turan(n, a);
    Box::new(move |x, y| Evaluation::at_least(t.theta_star(x, y), 2.0 * x.sin() * y.sin()))
}

fn lambda_over_one(n: usize, a: f64) -> PointEval {
    Box::new(move |x, _| Evaluation::at_least(eval_lambda(n, a, x).unwrap_or(f64::NAN), 1.0))
}

fn lambda_over_linear(n: usize, a: f64) -> PointEval {
    Box::new(move |x, _| {
        Evaluation::at_least(eval_lambda(n, a, x).unwrap_or(f64::NAN), 2.0 * (1.0 + x))
    })
}

fn u_integral_between(n: usize, _a: f64) -> PointEval {
    Box::new(move |x, _| {
        let v = integral_u_weighted(n, x, QuadratureConfig::closed_form()).unwrap_or(f64::NAN);
        let z = x.acos();
        Evaluation::between(v, z, PI - z)
    })
}

fn u_integral_reversed(n: usize, _a: f64) -> PointEval {
    Box::new(move |x, _| {
        let v = integral_u_weighted(n, x, QuadratureConfig::closed_form()).unwrap_or(f64::NAN);
        let z = x.acos();
        Evaluation::between(v, PI - z, z)
    })
}

fn tu_integral_unit(n: usize, _a: f64) -> PointEval {
    Box::new(move |x, _| {
        let v = integral_tu_weighted(n, x, QuadratureConfig::closed_form()).unwrap_or(f64::NAN);
        Evaluation::between(v, 0.0, 1.0)
    })
}

fn fejer_jackson_positive(n: usize, _a: f64) -> PointEval {
    Box::new(move |x, _| Evaluation::at_least(fejer_jackson_sum(n, x), 0.0))
}

fn fejer_jackson_upper(n: usize, _a: f64) -> PointEval {
    Box::new(move |x, _| Evaluation::at_most(fejer_jackson_sum(n, x), PI - x))
}

fn carslaw_unit(n: usize, _a: f64) -> PointEval {
    Box::new(move |x, _| Evaluation::between(carslaw_sum(n, x), 0.0, 1.0))
}

const TWO_PI_3: f64 = 2.0 * PI / 3.0;

/// All built-in specs, in a fixed order.
pub fn registry() -> Vec<InequalitySpec> {
    use EqPoint::{Any, At, Range};
    let eq = KnownEquality::new;
    vec![
        InequalitySpec {
            id: "eq1.1",
            statement: "S_{n,k}(x) > 0 for integers n, k >= 1 and 0 < x < pi",
            parity: Parity::AnyN,
            n_min: 1,
            a_param: AParam::Integer { min: 1 },
            domain: ANGLE,
            strict: true,
            known_equalities: vec![],
            prepare: s_positive,
            default_grid: grid_integer_1d,
        },
        InequalitySpec {
            id: "eq1.2",
            statement: "Theta_{n,k}(x,y) > 0 for integers n, k >= 1 and 0 < x, y < pi",
            parity: Parity::AnyN,
            n_min: 1,
            a_param: AParam::Integer { min: 1 },
            domain: ANGLE_2D,
            strict: true,
            known_equalities: vec![],
            prepare: theta_positive,
            default_grid: grid_integer_2d,
        },
        InequalitySpec {
            id: "eq1.3",
            statement: "S_{n,k}(x) > x(pi-x)/pi for integers n, k >= 2 and 0 < x < pi",
            parity: Parity::AnyN,
            n_min: 2,
            a_param: AParam::Integer { min: 2 },
            domain: ANGLE,
            strict: true,
            known_equalities: vec![],
            prepare: s_over_parabola,
            default_grid: grid_eq13,
        },
        InequalitySpec {
            id: "eq3.5",
            statement: "S_{n,a}(x) > sin(x) min{1, 2(1+cos x)} for n >= 1, a >= 1",
            parity: Parity::AnyN,
            n_min: 1,
            a_param: REAL_A,
            domain: ANGLE,
            strict: true,
            known_equalities: vec![
                eq(
                    1,
                    None,
                    Range {
                        lo: 0.0,
                        hi: TWO_PI_3,
                    },
                ),
                eq(
                    2,
                    Some(1.0),
                    Range {
                        lo: TWO_PI_3,
                        hi: PI,
                    },
                ),
                eq(3, Some(1.0), At(TWO_PI_3)),
            ],
            prepare: s_over_min_bound,
            default_grid: grid_1d,
        },
        InequalitySpec {
            id: "thm3.1",
            statement: "S_{n,a}(x) >= sin(x) for odd n, a >= 1",
            parity: Parity::OddN,
            n_min: 1,
            a_param: REAL_A,
            domain: ANGLE,
            strict: false,
            known_equalities: vec![eq(1, None, Any), eq(3, Some(1.0), At(TWO_PI_3))],
            prepare: s_over_sin,
            default_grid: grid_1d,
        },
        InequalitySpec {
            id: "thm3.2",
            statement: "S_{n,a}(x) >= 2 sin(x)(1+cos x) for even n, a >= 1",
            parity: Parity::EvenN,
            n_min: 2,
            a_param: REAL_A,
            domain: ANGLE,
            strict: false,
            known_equalities: vec![eq(2, Some(1.0), Any), eq(4, Some(1.0), At(FRAC_PI_2))],
            prepare: s_over_even_bound,
            default_grid: grid_1d,
        },
        InequalitySpec {
            id: "thm3.4",
            statement: "S_{n,a}(x) > 0 for all n >= 1 and 0 < x < pi iff a >= 1",
            parity: Parity::AnyN,
            n_min: 1,
            a_param: REAL_A,
            domain: ANGLE,
            strict: true,
            known_equalities: vec![],
            prepare: s_positive,
            default_grid: grid_1d,
        },
        InequalitySpec {
            id: "thm3.5",
            statement: "S*_{n,a}(x) >= sin(x) for odd n, a >= 1",
            parity: Parity::OddN,
            n_min: 1,
            a_param: REAL_A,
            domain: ANGLE,
            strict: false,
            known_equalities: vec![eq(1, None, Any)],
            prepare: s_star_over_sin,
            default_grid: grid_1d,
        },
        InequalitySpec {
            id: "thm3.6",
            statement: "S*_{n,a}(x) >= 2 sin(x) for even n >= 2, a >= 1",
            parity: Parity::EvenN,
            n_min: 2,
            a_param: REAL_A,
            domain: ANGLE,
            strict: false,
            known_equalities: vec![eq(2, Some(1.0), Any), eq(4, Some(1.0), At(FRAC_PI_2))],
            prepare: s_star_over_two_sin,
            default_grid: grid_1d,
        },
        InequalitySpec {
            id: "thm3.7",
            statement: "Theta_{n,a}(x,y) >= sin(x) sin(y) for odd n, a >= 1",
            parity: Parity::OddN,
            n_min: 1,
            a_param: REAL_A,
            domain: ANGLE_2D,
            strict: false,
            known_equalities: vec![eq(1, None, Any)],
            prepare: theta_over_product,
            default_grid: grid_2d,
        },
        InequalitySpec {
            id: "thm3.8",
            statement:
                "Theta_{n,a}(x,y) >= 2 sin(x) sin(y)(1 + cos x cos y) for even n >= 2, a >= 1",
            parity: Parity::EvenN,
            n_min: 2,
            a_param: REAL_A,
            domain: ANGLE_2D,
            strict: false,
            known_equalities: vec![eq(2, Some(1.0), Any)],
            prepare: theta_over_even_bound,
            default_grid: grid_2d,
        },
        InequalitySpec {
            id: "thm3.9-odd",
            statement: "Theta*_{n,a}(x,y) >= sin(x) sin(y) for odd n, a >= 1",
            parity: Parity::OddN,
            n_min: 1,
            a_param: REAL_A,
            domain: ANGLE_2D,
            strict: false,
            known_equalities: vec![eq(1, None, Any)],
            prepare: theta_star_over_product,
            default_grid: grid_2d,
        },
        InequalitySpec {
            id: "thm3.9-even",
            statement: "Theta*_{n,a}(x,y) >= 2 sin(x) sin(y) for even n, a >= 1",
            parity: Parity::EvenN,
            n_min: 2,
            a_param: REAL_A,
            domain: ANGLE_2D,
            strict: false,
            known_equalities: vec![eq(2, Some(1.0), Any)],
            prepare: theta_star_over_two_product,
            default_grid: grid_2d,
        },
        InequalitySpec {
            id: "thm3.10",
            statement: "Theta_{n,a}(x,y) > 0 for all n >= 1 and 0 < x, y < pi iff a >= 1",
            parity: Parity::AnyN,
            n_min: 1,
            a_param: REAL_A,
            domain: ANGLE_2D,
            strict: true,
            known_equalities: vec![],
            prepare: theta_positive,
            default_grid: grid_2d,
        },
        InequalitySpec {
            id: "thm4.1",
            statement: "Lambda_{n,a}(x) >= 1 for even n >= 0, a >= 1, -1 < x < 1",
            parity: Parity::EvenN,
            n_min: 0,
            a_param: REAL_A,
            domain: CHEB,
            strict: false,
            known_equalities: vec![eq(0, None, Any), eq(2, Some(1.0), At(-0.5))],
            prepare: lambda_over_one,
            default_grid: grid_lambda,
        },
        InequalitySpec {
            id: "thm4.2",
            statement: "Lambda_{n,a}(x) >= 2(1+x) for odd n >= 1, a >= 1, -1 < x < 1",
            parity: Parity::OddN,
            n_min: 1,
            a_param: REAL_A,
            domain: CHEB,
            strict: false,
            known_equalities: vec![eq(1, Some(1.0), Any), eq(3, Some(1.0), At(0.0))],
            prepare: lambda_over_linear,
            default_grid: grid_lambda,
        },
        InequalitySpec {
            id: "thm4.3",
            statement:
                "arccos x < int_x^1 U_{2n}(t)/sqrt(1-t^2) dt < pi - arccos x for n >= 1, 0 < x < 1",
            parity: Parity::AnyN,
            n_min: 1,
            a_param: AParam::Unused,
            domain: Domain::Interval { lo: 0.0, hi: 1.0 },
            strict: true,
            known_equalities: vec![],
            prepare: u_integral_between,
            default_grid: grid_cheb_integral,
        },
        InequalitySpec {
            id: "thm4.3-reversed",
            statement:
                "pi - arccos x < int_x^1 U_{2n}(t)/sqrt(1-t^2) dt < arccos x for n >= 1, -1 < x < 0",
            parity: Parity::AnyN,
            n_min: 1,
            a_param: AParam::Unused,
            domain: Domain::Interval { lo: -1.0, hi: 0.0 },
            strict: true,
            known_equalities: vec![],
            prepare: u_integral_reversed,
            default_grid: grid_cheb_integral,
        },
        InequalitySpec {
            id: "thm4.5",
            statement: "0 < int_x^1 T_{n+1}(t) U_n(t)/sqrt(1-t^2) dt <= 1 for n >= 0, -1 < x < 1",
            parity: Parity::AnyN,
            n_min: 0,
            a_param: AParam::Unused,
            domain: CHEB,
            strict: false,
            known_equalities: vec![eq(0, None, At(0.0))],
            prepare: tu_integral_unit,
            default_grid: grid_cheb_integral,
        },
        InequalitySpec {
            id: "eq4.3-lower",
            statement: "sum_{j=1}^n sin(jx)/j > 0 for n >= 1, 0 < x < pi",
            parity: Parity::AnyN,
            n_min: 1,
            a_param: AParam::Unused,
            domain: ANGLE,
            strict: true,
            known_equalities: vec![],
            prepare: fejer_jackson_positive,
            default_grid: grid_classical,
        },
        InequalitySpec {
            id: "eq4.3-upper",
            statement: "sum_{j=1}^n sin(jx)/j < pi - x for n >= 1, 0 < x < pi",
            parity: Parity::AnyN,
            n_min: 1,
            a_param: AParam::Unused,
            domain: ANGLE,
            strict: true,
            known_equalities: vec![],
            prepare: fejer_jackson_upper,
            default_grid: grid_classical,
        },
        InequalitySpec {
            id: "eq4.4",
            statement: "0 < sum_{j=0}^n sin((2j+1)x)/(2j+1) <= 1 for n >= 0, 0 < x < pi",
            parity: Parity::AnyN,
            n_min: 0,
            a_param: AParam::Unused,
            domain: ANGLE,
            strict: false,
            known_equalities: vec![eq(0, None, At(FRAC_PI_2))],
            prepare: carslaw_unit,
            default_grid: grid_classical,
        },
    ]
}

pub fn spec_ids() -> Vec<&'static str> {
    registry().iter().map(|s| s.id).collect()
}

pub fn find_spec(id: &str) -> Option<InequalitySpec> {
    registry().into_iter().find(|s| s.id == id)
}
