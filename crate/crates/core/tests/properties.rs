use proptest::prelude::*;

use quiverstab::stability::{
    hyp_rank_sum_brute, hyp_rank_sum_closed, max_slope_filter, sticking_out_parts,
    translate_compare, ClosedForm, HypPair, Orientation, Translation,
};
use quiverstab::{CylinderStaircase, Direction, Parallelepiped, QVertex, Support};

fn v(l1: i64, l2: i64, t: i64) -> QVertex {
    QVertex::new(l1, l2, t).unwrap()
}

fn segment_or_rectangle() -> impl Strategy<Value = Parallelepiped> {
    (0i64..9, 0i64..9, -2i64..3, 0usize..6, 1u32..6, 1u32..6).prop_filter_map(
        "shape must fit in the quiver",
        |(a, b, t, kind, p, q)| {
            let ext = match kind {
                0 => [p, 0, 0],
                1 => [0, p, 0],
                2 => [0, 0, p],
                3 => [p, q, 0],
                4 => [p, 0, q],
                _ => [0, p, q],
            };
            Parallelepiped::new(v(a.max(b), a.min(b), t), ext[0], ext[1], ext[2]).ok()
        },
    )
}

fn classical() -> impl Strategy<Value = CylinderStaircase> {
    (
        0i64..3,
        0i64..3,
        -2i64..3,
        1u32..5,
        0u32..2,
        0u32..2,
        0u32..3,
    )
        .prop_map(|(xa, xb, t, r, e1, e2, d0)| {
            let (d1, d2) = (r - 1 + e1, r - 1 + e2);
            let b = d2 as i64 + xb;
            let a = b + d1 as i64 + xa;
            CylinderStaircase::classical(v(a, b, t), r, d1, d2, d0).unwrap()
        })
}

proptest! {
    #[test]
    fn shifting_lowers_slope(shape in segment_or_rectangle()) {
        for d in Direction::ALL {
            if let Ok(rep) = translate_compare(&shape, Translation::Plus(d)) {
                prop_assert!(rep.mu_after < rep.mu_before, "{} + {}: {} -> {}", shape, d, rep.mu_before, rep.mu_after);
            }
        }
    }

    #[test]
    fn v0_v1_rectangles_lose_slope_when_translated(a in 0i64..9, b in 0i64..9, t in -2i64..3,
                                                   p in 1u32..6, q in 1u32..6) {
        let shape = Parallelepiped::new(v(a.max(b), a.min(b), t), p, 0, q);
        prop_assume!(shape.is_ok());
        let shape = shape.unwrap();
        for remove in [Direction::V1, Direction::V0] {
            if let Ok(rep) = translate_compare(&shape, Translation::Difference { add: Direction::V2, remove }) {
                prop_assert!(rep.mu_after < rep.mu_before);
            }
        }
    }

    #[test]
    fn classical_staircases_are_multistable(cs in classical()) {
        let s = cs.support();
        let mu = s.slope().unwrap();
        if let Some(e) = max_slope_filter(&s).unwrap() {
            prop_assert!(e.slope < mu, "{}: filter slope {} vs {}", cs, e.slope, mu);
        }
    }

    #[test]
    fn sticking_out_parts_are_steeper(cs in classical()) {
        prop_assume!(cs.num_steps() >= 2);
        let s = cs.support();
        for o in sticking_out_parts(&cs) {
            let rest: Support = s.minus(&o);
            prop_assert!(o.slope().unwrap() > rest.slope().unwrap());
        }
    }

    /// The printed `V0, V1` form disagrees with the brute-force sum once
    /// `c >= 1`; this pins down the polynomial the brute force actually
    /// follows, `(c+1)(x+z)(c(x-z+1) + 2xz)`.
    #[test]
    fn v0_v1_hypotenuse_rank_sum(l1 in 0i64..11, l2 in 0i64..11, c in 0u32..8) {
        let a = v(l1.max(l2), l1.min(l2), 0);
        if let Ok(brute) = hyp_rank_sum_brute(&a, c, HypPair::V0V1, Orientation::Forward) {
            let (x, z, c) = (a.l1() - a.l2() + 1, a.l2() + 1, c as i64);
            prop_assert_eq!((c + 1) * (x + z) * (c * (x - z + 1) + 2 * x * z), 4 * brute as i64);
            let printed = hyp_rank_sum_closed(&a, c as u32, ClosedForm::EV0V1).unwrap();
            prop_assert_eq!(printed == 4 * brute as i64, c == 0);
        }
    }
}
