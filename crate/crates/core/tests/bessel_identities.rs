mod common;

use common::{fd_derivative_5pt, oracle_series_j};
use isobessel::{
    bessel_j, bessel_j_derivative, ladder_lower, ladder_raise, Order, RadialGrid,
};
use isobessel::verify::{check_bessel_ode, check_ladder, check_recursion};
use proptest::prelude::*;

fn order(n: u32) -> Order {
    Order::new(n).unwrap()
}

// mpmath dps=50: besselj(n, r)
const J_TABLE: [(u32, f64, f64); 108] = [
    (0, 0.5, 0.9384698072408129),
    (0, 1.0, 0.7651976865579666),
    (0, 2.5, -0.048383776468198),
    (0, 5.0, -0.1775967713143383),
    (0, 7.5, 0.2663396578803784),
    (0, 8.0, 0.1716508071375539),
    (0, 8.5, 0.041939251842934504),
    (0, 12.5, 0.1468840547004211),
    (0, 20.0, 0.16702466434058316),
    (0, 30.0, -0.08636798358104021),
    (0, 40.0, 0.00736689058423729),
    (0, 50.0, 0.055812327669251816),
    (1, 0.5, 0.2422684576748739),
    (1, 1.0, 0.4400505857449335),
    (1, 2.5, 0.49709410246427405),
    (1, 5.0, -0.32757913759146523),
    (1, 7.5, 0.1352484275797055),
    (1, 8.0, 0.23463634685391463),
    (1, 8.5, 0.2731219636740537),
    (1, 12.5, -0.16548380461475973),
    (1, 20.0, 0.06683312417585005),
    (1, 30.0, -0.11875106261662294),
    (1, 40.0, 0.126038318037585),
    (1, 50.0, -0.09751182812517514),
    (2, 0.5, 0.03060402345868264),
    (2, 1.0, 0.11490348493190047),
    (2, 2.5, 0.44605905843961724),
    (2, 5.0, 0.046565116277752214),
    (2, 7.5, -0.23027341052579026),
    (2, 8.0, -0.11299172042407525),
    (2, 8.5, 0.022324739609784025),
    (2, 12.5, -0.17336146343878267),
    (2, 20.0, -0.16034135192299814),
    (2, 30.0, 0.07845124607326535),
    (2, 40.0, -0.0010649746823580396),
    (2, 50.0, -0.05971280079425882),
    (3, 0.5, 0.002563729994587244),
    (3, 1.0, 0.019563353982668407),
    (3, 2.5, 0.21660039103911352),
    (3, 5.0, 0.364831230613667),
    (3, 7.5, -0.2580609131934603),
    (3, 8.0, -0.2911322070659523),
    (3, 8.5, -0.2626162038576848),
    (3, 12.5, 0.11000813631434926),
    (3, 20.0, -0.09890139456044968),
    (3, 30.0, 0.129211228759725),
    (3, 40.0, -0.1261448155058208),
    (3, 50.0, 0.09273480406163444),
    (5, 0.5, 8.053627241357474e-06),
    (5, 1.0, 0.00024975773021123444),
    (5, 2.5, 0.01950162513450322),
    (5, 5.0, 0.26114054612017007),
    (5, 7.5, 0.28347390516255044),
    (5, 8.0, 0.18577477219056332),
    (5, 8.5, 0.06713301937831893),
    (5, 12.5, 0.03473769976223973),
    (5, 20.0, 0.15116976798239498),
    (5, 30.0, -0.14324029551207706),
    (5, 40.0, 0.12257346597711778),
    (5, 50.0, -0.08140024769656964),
    (8, 0.5, 3.75822315479761e-10),
    (8, 1.0, 9.4223441726045e-08),
    (8, 2.5, 0.0001240773664298689),
    (8, 5.0, 0.018405216654802),
    (8, 7.5, 0.1744078904958313),
    (8, 8.0, 0.22345498635110295),
    (8, 8.5, 0.2693545670990819),
    (8, 12.5, -0.05382403945501136),
    (8, 20.0, -0.07386892884075034),
    (8, 30.0, 0.06289085331645854),
    (8, 40.0, -0.08630831524531733),
    (8, 50.0, 0.10405856317363928),
    (10, 0.5, 2.6131773608228033e-13),
    (10, 1.0, 2.6306151236874534e-10),
    (10, 2.5, 2.2247284173983834e-06),
    (10, 5.0, 0.0014678026473104741),
    (10, 7.5, 0.03899825788941221),
    (10, 8.0, 0.06076702677425116),
    (10, 8.5, 0.08943285888058737),
    (10, 12.5, 0.2788717465935357),
    (10, 20.0, 0.1864825580239451),
    (10, 30.0, -0.12987689399858876),
    (10, 40.0, 0.11938336278226096),
    (10, 50.0, -0.11384784914946938),
    (15, 0.5, 7.094207076602067e-22),
    (15, 1.0, 2.2975315322103443e-17),
    (15, 2.5, 1.970680899558723e-11),
    (15, 5.0, 4.796743277517957e-07),
    (15, 7.5, 0.0001263842505844424),
    (15, 8.0, 0.0002926033490665719),
    (15, 8.5, 0.0006327611658419357),
    (15, 12.5, 0.04642763553250351),
    (15, 20.0, -0.0008120690551537479),
    (15, 30.0, -0.15624706839035765),
    (15, 40.0, 0.12288081079867547),
    (15, 50.0, -0.10822559897511455),
    (20, 0.5, 3.7272019617047145e-31),
    (20, 1.0, 3.8735030085246576e-25),
    (20, 2.5, 3.309079383658777e-17),
    (20, 5.0, 2.7703300521289416e-11),
    (20, 7.5, 6.29609082847652e-08),
    (20, 8.0, 2.0805829639717027e-07),
    (20, 8.5, 6.3156200330443e-07),
    (20, 12.5, 0.00048433775975865437),
    (20, 20.0, 0.16474777377532654),
    (20, 30.0, 0.0048310199934040645),
    (20, 40.0, 0.1277939335508489),
    (20, 50.0, -0.11670435275957974),
];

// mpmath dps=50: besseljzero(1, 1)
const J1_ZERO_1: f64 = 3.8317059702075125;

#[test]
fn values_match_frozen_table() {
    for &(n, r, expected) in J_TABLE.iter() {
        let got = bessel_j(order(n), r).unwrap();
        assert!(
            (got - expected).abs() <= 1e-13,
            "J_{n}({r}): got {got}, expected {expected}"
        );
    }
}

#[test]
fn recurrence_regime_matches_series_oracle() {
    // Both evaluation methods hold ~1e-13 absolute just past the seam.
    for n in 0..=20u32 {
        for &r in &[8.2, 8.6, 9.0, 9.5, 10.0] {
            let got = bessel_j(order(n), r).unwrap();
            let expected = oracle_series_j(n, r);
            assert!(
                (got - expected).abs() <= 5e-13,
                "J_{n}({r}): recurrence {got} vs series {expected}"
            );
        }
    }
}

#[test]
fn pinned_point_values() {
    assert_eq!(bessel_j(order(0), 0.0).unwrap(), 1.0);
    assert_eq!(bessel_j(order(1), 0.0).unwrap(), 0.0);
    assert!((bessel_j(order(0), 1.0).unwrap() - 0.7651976865579666).abs() <= 1e-15);
    assert!((bessel_j(order(2), 1.0).unwrap() - 0.1149034849319005).abs() <= 1e-15);

    assert!((bessel_j_derivative(order(1), 1.0).unwrap() - 0.3251471008130331).abs() <= 1e-14);
    assert!((bessel_j_derivative(order(0), 1.0).unwrap() + 0.4400505857449335).abs() <= 1e-15);
    // J_0' = -J_1 vanishes at the first zero of J_1.
    assert!(bessel_j_derivative(order(0), J1_ZERO_1).unwrap().abs() <= 1e-10);

    assert!((ladder_raise(order(0), 1.0).unwrap() + 0.4400505857449335).abs() <= 1e-15);
    // mpmath dps=50: -besselj(2, 2)
    assert!((ladder_raise(order(1), 2.0).unwrap() + 0.3528340286156377).abs() <= 1e-14);
    assert!((ladder_lower(order(1), 1.0).unwrap() - 0.7651976865579666).abs() <= 1e-15);
    // mpmath dps=50: besselj(1, 2)
    assert!((ladder_lower(order(2), 2.0).unwrap() - 0.5767248077568734).abs() <= 1e-14);
    // Lowering J_1 lands on J_0, which vanishes nowhere near as fast; instead
    // pin the image zero: raising J_0 at the first J_1 zero gives -J_1 = 0.
    assert!(ladder_raise(order(0), J1_ZERO_1).unwrap().abs() <= 1e-10);
}

#[test]
fn ode_ladder_recursion_residuals_on_dense_grid() {
    let grid = RadialGrid::uniform(0.05, 40.0, 0.05).unwrap();
    for n in 0..=10u32 {
        let ode = check_bessel_ode(order(n), &grid).unwrap();
        assert!(
            ode.max_abs <= 1e-8,
            "ODE residual n={n}: {:e} at r={}",
            ode.max_abs,
            ode.argmax_point
        );
        let (raise, lower) = check_ladder(order(n), &grid).unwrap();
        assert!(raise.max_abs <= 1e-10, "raise n={n}: {:e}", raise.max_abs);
        assert!(lower.max_abs <= 1e-10, "lower n={n}: {:e}", lower.max_abs);
        if n >= 1 {
            let rec = check_recursion(order(n), &grid).unwrap();
            assert!(rec.max_abs <= 1e-10, "recursion n={n}: {:e}", rec.max_abs);
        }
    }
}

#[test]
fn derivative_matches_finite_differences() {
    for n in 0..=10u32 {
        let nn = order(n);
        let f = |r: f64| bessel_j(nn, r).unwrap();
        let mut r = 0.1;
        while r < 39.0 {
            let analytic = bessel_j_derivative(nn, r).unwrap();
            let numeric = fd_derivative_5pt(f, r, 1e-4);
            assert!(
                (analytic - numeric).abs() <= 1e-7,
                "J_{n}'({r}): analytic {analytic} vs fd {numeric}"
            );
            r += 0.5;
        }
    }
}

#[test]
fn domain_errors() {
    assert!(Order::new(21).is_err());
    assert!(bessel_j(order(0), -1.0).is_err());
    assert!(bessel_j(order(0), 50.5).is_err());
    assert!(bessel_j(order(0), f64::NAN).is_err());
    assert!(bessel_j_derivative(order(0), 0.0).is_err());
    assert!(ladder_raise(order(0), 0.0).is_err());
    assert!(ladder_lower(order(0), 1.0).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn recursion_and_ladder_hold_at_random_points(
        n in 1u32..=19,
        r in 0.05f64..49.9,
    ) {
        let jn = bessel_j(order(n), r).unwrap();
        let jm = bessel_j(order(n - 1), r).unwrap();
        let jp = bessel_j(order(n + 1), r).unwrap();
        let recursion = (2.0 * n as f64 / r) * jn - jp - jm;
        prop_assert!(recursion.abs() <= 1e-10, "recursion residual {:e}", recursion);

        let raise = ladder_raise(order(n), r).unwrap() + jp;
        prop_assert!(raise.abs() <= 1e-10, "raise residual {:e}", raise);
        let lower = ladder_lower(order(n), r).unwrap() - jm;
        prop_assert!(lower.abs() <= 1e-10, "lower residual {:e}", lower);
    }
}
