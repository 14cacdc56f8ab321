mod support;

use maxplus_convex::{ConvexSet, MaxPlus, TropMatrix, TropVector};
use proptest::prelude::*;

use support::oracle::{naive_extreme_points, naive_set_member, IVec};
use support::{coeff, convex_coeffs, from_ivec, ivec, nonzero_ivec, to_ivec};

#[derive(Clone, Debug)]
struct Instance {
    n: usize,
    points: Vec<IVec>,
    rays: Vec<IVec>,
}

impl Instance {
    fn set(&self) -> ConvexSet<i64> {
        ConvexSet::new(
            self.n,
            self.points.iter().map(from_ivec).collect(),
            self.rays.iter().map(from_ivec).collect(),
        )
        .unwrap()
    }

    /// Member with the given point (convex) and ray coefficients.
    fn member(&self, pc: &[MaxPlus<i64>], rc: &[MaxPlus<i64>]) -> TropVector<i64> {
        let p = TropMatrix::new(self.n, self.points.iter().map(from_ivec).collect()).unwrap();
        let r = TropMatrix::new(self.n, self.rays.iter().map(from_ivec).collect()).unwrap();
        p.combine(&pc[..self.points.len()]).unwrap().oplus(&r.combine(&rc[..self.rays.len()]).unwrap()).unwrap()
    }
}

fn instance(max_rays: usize) -> impl Strategy<Value = Instance> {
    (1usize..=4, 1usize..=6, 0usize..=max_rays).prop_flat_map(|(n, p, q)| {
        (prop::collection::vec(ivec(n), p), prop::collection::vec(nonzero_ivec(n), q))
            .prop_map(move |(points, rays)| Instance { n, points, rays })
    })
}

/// Instance plus two members `u, v`.
fn with_members(max_rays: usize) -> impl Strategy<Value = (Instance, TropVector<i64>, TropVector<i64>)> {
    instance(max_rays).prop_flat_map(|inst| {
        let (p, q) = (inst.points.len(), inst.rays.len());
        (
            Just(inst),
            convex_coeffs(p),
            prop::collection::vec(coeff(), q),
            convex_coeffs(p),
            prop::collection::vec(coeff(), q),
        )
            .prop_map(|(inst, a, b, c, d)| {
                let u = inst.member(&a, &b);
                let v = inst.member(&c, &d);
                (inst, u, v)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn membership_matches_oracle(inst in instance(3), x in ivec(4)) {
        let x = &x[..inst.n].to_vec();
        let a = inst.set();
        prop_assert_eq!(a.member(&from_ivec(x)).unwrap(), naive_set_member(&inst.points, &inst.rays, x));
    }

    #[test]
    fn extreme_points_match_oracle(inst in instance(3)) {
        let got: Vec<IVec> = inst.set().extreme_points().iter().map(to_ivec).collect();
        prop_assert_eq!(got, naive_extreme_points(&inst.points, &inst.rays));
    }

    #[test]
    fn compact_decomposition((inst, u, _v) in with_members(0)) {
        let a = inst.set();
        let d = a.decompose(&u).unwrap();
        prop_assert!(d.ray_terms.is_empty());
        prop_assert!(d.point_terms.len() <= inst.n + 1);
        prop_assert_eq!(d.point_weight(), MaxPlus::one());
        prop_assert_eq!(d.recombine(), u);
        for t in &d.point_terms {
            prop_assert!(a.is_extreme(&d.points[t.index]).unwrap());
        }
    }

    #[test]
    fn general_decomposition((inst, u, _v) in with_members(3)) {
        let a = inst.set();
        let d = a.decompose(&u).unwrap();
        prop_assert!(d.len() <= inst.n + 1);
        prop_assert_eq!(d.point_weight(), MaxPlus::one());
        prop_assert_eq!(d.recombine(), u);
        let rec = a.recession();
        for t in &d.ray_terms {
            prop_assert!(rec.is_extreme_generator(t.index).unwrap());
        }
        for t in &d.point_terms {
            prop_assert!(a.is_extreme(&d.points[t.index]).unwrap());
        }
    }

    #[test]
    fn representation_identity(inst in instance(3)) {
        let a = inst.set();
        prop_assert!(a.minkowski_representation().same_set(&a).unwrap());
    }

    #[test]
    fn recession_independent_of_base_point(
        (inst, v, w) in with_members(3),
        rc in prop::collection::vec(coeff(), 3),
        lambda in -3i64..=3,
    ) {
        let a = inst.set();
        let rec = a.recession();
        let u = rec.generators().combine(&rc[..rec.len()]).unwrap();
        let step = u.scale(MaxPlus::Finite(lambda));
        prop_assert!(a.member(&v.oplus(&step).unwrap()).unwrap());
        prop_assert!(a.member(&w.oplus(&step).unwrap()).unwrap());
    }

    #[test]
    fn segments_stay_inside((inst, u, v) in with_members(3), alpha in -5i64..=0, first in any::<bool>()) {
        let a = inst.set();
        let (al, be) = if first { (MaxPlus::Finite(0), MaxPlus::Finite(alpha)) } else { (MaxPlus::Finite(alpha), MaxPlus::Finite(0)) };
        let x = u.scale(al).oplus(&v.scale(be)).unwrap();
        prop_assert!(a.member(&x).unwrap());
    }

    #[test]
    fn extreme_points_are_the_finite_cross_section(inst in instance(3)) {
        let a = inst.set();
        let lifted: Vec<TropVector<i64>> = a
            .extreme_points()
            .iter()
            .map(|p| p.lift(MaxPlus::one()).normalized().unwrap())
            .collect();
        let basis: Vec<TropVector<i64>> = a
            .homogenize()
            .extract_basis()
            .generators()
            .columns()
            .iter()
            .filter(|g| !g[inst.n].is_zero())
            .cloned()
            .collect();
        prop_assert!(maxplus_convex::same_generator_set(&lifted, &basis, 0));
    }

    /// An extreme point only arises as an endpoint of a segment through it
    /// whose coefficient there is 𝟙.
    #[test]
    fn extreme_points_are_segment_ends(
        inst in instance(2),
        masks in prop::collection::vec(any::<u8>(), 6),
        drops in prop::collection::vec(1i64..=3, 6),
    ) {
        let a = inst.set();
        let h = a.homogenize();
        for x in a.extreme_points() {
            let target = x.lift(MaxPlus::one());
            for (&mask, &drop) in masks.iter().zip(&drops) {
                let lower = |keep: bool| -> TropVector<i64> {
                    TropVector::new(target.iter().enumerate().map(|(i, &c)| {
                        if i == inst.n || ((mask >> (i % 8)) & 1 == 1) == keep { c } else { c * MaxPlus::Finite(-drop) }
                    }).collect())
                };
                let (py, pz) = (h.project(&lower(true)).unwrap(), h.project(&lower(false)).unwrap());
                let (wy, alpha) = py.split_last().unwrap();
                let (wz, beta) = pz.split_last().unwrap();
                let (Some(ia), Some(ib)) = (alpha.inverse(), beta.inverse()) else { continue };
                if alpha + beta != MaxPlus::one() || wy.oplus(&wz).unwrap() != x {
                    continue;
                }
                let (y, z) = (wy.scale(ia), wz.scale(ib));
                prop_assert!(a.member(&y).unwrap() && a.member(&z).unwrap());
                prop_assert!(
                    (x == y && alpha == MaxPlus::one()) || (x == z && beta == MaxPlus::one()),
                    "extreme {:?} = {:?}⊙{:?} ⊕ {:?}⊙{:?}", x, alpha, y, beta, z
                );
            }
        }
    }
}
