//! Intersection theory on products of projective spaces, split projective
//! bundles over them, and blowups along points or split subbundles.
//!
//! Top intersections are computed by pushing forward along the tower:
//! `π_* ξ^{r-1+i} = h_i(D_1, …, D_r)` for `ℙ(⊕𝒪(D_i))` and the Segre class
//! of the normal bundle for exceptional divisors. For products and bundles a
//! second route reduces to normal form with the Grothendieck relation.

mod classes;
mod model;
mod profile;

use std::sync::Arc;

pub use classes::{complete_homogeneous, elementary, ClassPoly, DivisorClass};
pub use model::{BlowupCenter, CenterShape, ChowModel, ModelKind};
pub use profile::{to_profile, IntersectionProfile};

use crate::arith::Rational;
use crate::error::Result;

pub fn build_projective_product(dims: &[usize]) -> ChowModel {
    ChowModel::projective_product(dims)
}

pub fn build_projective_bundle(base: Arc<ChowModel>, summands: Vec<DivisorClass>) -> Result<ChowModel> {
    ChowModel::projective_bundle(base, summands)
}

pub fn build_blowup(ambient: Arc<ChowModel>, center: BlowupCenter) -> Result<ChowModel> {
    ChowModel::blowup(ambient, center)
}

pub fn intersect(model: &ChowModel, classes: &[&DivisorClass]) -> Result<Rational> {
    model.intersect(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn f1_model(second: i64) -> ChowModel {
        let p1 = Arc::new(build_projective_product(&[1]));
        let h = p1.generator("h").unwrap();
        build_projective_bundle(p1, vec![h.scale(&int(0)), h.scale(&int(second))]).unwrap()
    }

    #[test]
    fn projective_plane_point() {
        let p2 = build_projective_product(&[2]);
        let h = p2.generator("h").unwrap();
        assert_eq!(intersect(&p2, &[&h, &h]).unwrap(), int(1));
    }

    #[test]
    fn kunneth_on_quadric() {
        let q = build_projective_product(&[1, 1]);
        let h1 = q.generator("h1").unwrap();
        let h2 = q.generator("h2").unwrap();
        assert_eq!(intersect(&q, &[&h1, &h2]).unwrap(), int(1));
        assert_eq!(intersect(&q, &[&h1, &h1]).unwrap(), int(0));
    }

    #[test]
    fn canonical_of_line() {
        let p1 = build_projective_product(&[1]);
        assert_eq!(p1.canonical(), &p1.class(&[("h", -2)]).unwrap());
    }

    #[test]
    fn bundle_self_intersections() {
        let x = f1_model(1);
        let xi = x.generator("xi").unwrap();
        let f = x.generator("h").unwrap();
        assert_eq!(intersect(&x, &[&xi, &xi]).unwrap(), int(1));
        assert_eq!(intersect(&x, &[&xi, &f]).unwrap(), int(1));
        assert_eq!(intersect(&x, &[&f, &f]).unwrap(), int(0));
        let y = f1_model(0);
        let xi = y.generator("xi").unwrap();
        assert_eq!(intersect(&y, &[&xi, &xi]).unwrap(), int(0));
        let z = f1_model(-1);
        let xi = z.generator("xi").unwrap();
        assert_eq!(intersect(&z, &[&xi, &xi]).unwrap(), int(-1));
    }

    #[test]
    fn relative_anticanonical_has_fibre_degree_two() {
        let x = f1_model(1);
        let f = x.generator("h").unwrap();
        let k_b = x.class(&[("h", -2)]).unwrap();
        let k_rel = x.canonical() - &k_b;
        assert_eq!(intersect(&x, &[&(-&k_rel), &f]).unwrap(), int(2));
    }

    #[test]
    fn hirzebruch_canonical_square_is_eight() {
        for d in -3..=3 {
            let x = f1_model(d);
            let k = x.canonical().clone();
            assert_eq!(intersect(&x, &[&k, &k]).unwrap(), int(8));
        }
    }

    fn point_blowup_of_quadric() -> ChowModel {
        let q = Arc::new(build_projective_product(&[1, 1]));
        let center = BlowupCenter::point(&q).unwrap();
        build_blowup(q, center).unwrap()
    }

    #[test]
    fn point_blowup_numbers() {
        let bl = point_blowup_of_quadric();
        let e = bl.generator("E").unwrap();
        let l = bl.generator("h1").unwrap();
        assert_eq!(intersect(&bl, &[&e, &e]).unwrap(), int(-1));
        assert_eq!(intersect(&bl, &[&l, &e]).unwrap(), int(0));
        assert_eq!(intersect(&bl, &[&l, &l]).unwrap(), int(0));
        let c = &l.scale(&int(2)) - &e;
        assert_eq!(intersect(&bl, &[&c, &c]).unwrap(), int(-1));
        let c = &l - &e;
        assert_eq!(intersect(&bl, &[&c, &c]).unwrap(), int(-1));
        // K_Bl = ρ*K + E
        let expected = bl.class(&[("h1", -2), ("h2", -2), ("E", 1)]).unwrap();
        assert_eq!(bl.canonical(), &expected);
        // K² drops by one
        let k = bl.canonical().clone();
        assert_eq!(intersect(&bl, &[&k, &k]).unwrap(), int(7));
    }

    #[test]
    fn point_blowup_riemann_roch() {
        let bl = point_blowup_of_quadric();
        // χ(𝒪) = 1 and χ(-E)= 0 (ideal sheaf of a point on a rational surface)
        assert_eq!(bl.euler_characteristic(&bl.zero_class()).unwrap(), int(1));
        let e = bl.generator("E").unwrap();
        assert_eq!(bl.euler_characteristic(&(-&e)).unwrap(), int(0));
        // χ(h1 + h2 - E) = 4 - 1
        let d = bl.class(&[("h1", 1), ("h2", 1), ("E", -1)]).unwrap();
        assert_eq!(bl.euler_characteristic(&d).unwrap(), int(3));
    }

    #[test]
    fn wrong_arity() {
        let p2 = build_projective_product(&[2]);
        let h = p2.generator("h").unwrap();
        assert!(matches!(
            intersect(&p2, &[&h]),
            Err(crate::error::Error::WrongArity { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn empty_bundle() {
        let p1 = Arc::new(build_projective_product(&[1]));
        assert_eq!(
            build_projective_bundle(p1, vec![]).unwrap_err(),
            crate::error::Error::EmptyBundle
        );
    }

    #[test]
    fn profiles() {
        let q = build_projective_product(&[1, 1]);
        let l = q.generator("h1").unwrap();
        let h = q.generator("h2").unwrap();
        let p = to_profile(&q, &[("L", &l), ("H", &h)]).unwrap();
        assert_eq!(p.get(&[("L", 2)]).unwrap(), int(0));
        assert_eq!(p.get(&[("L", 1), ("H", 1)]).unwrap(), int(1));
        assert_eq!(p.get(&[("H", 2)]).unwrap(), int(0));
        assert_eq!(p.power(&[int(1), int(1)]), int(2));
        assert_eq!(
            p.evaluate(&[vec![int(1), int(1)], vec![rat(1, 2), int(0)]]).unwrap(),
            rat(1, 2)
        );

        let x = f1_model(1);
        let xi = x.generator("xi").unwrap();
        let f = x.generator("h").unwrap();
        let p = to_profile(&x, &[("xi", &xi), ("f", &f)]).unwrap();
        assert_eq!(p.get(&[("xi", 2)]).unwrap(), int(1));
        assert_eq!(p.get(&[("xi", 1), ("f", 1)]).unwrap(), int(1));
        assert_eq!(p.get(&[("f", 2)]).unwrap(), int(0));

        let pt = ChowModel::point();
        let p = to_profile(&pt, &[]).unwrap();
        assert_eq!(p.number(&[]).unwrap(), int(1));
    }

    #[test]
    fn subbundle_blowup_dimensions() {
        // ℙ(𝒪⊕𝒪(1)) over ℙ¹ × ℙ¹_t, blow up {x_0 = 0} × 0
        let b = Arc::new(ChowModel::projective_product_named(&[1, 1], vec!["h".into(), "t".into()]));
        let h = b.generator("h").unwrap();
        let amb = Arc::new(
            build_projective_bundle(b.clone(), vec![b.zero_class(), h.clone()]).unwrap(),
        );
        let center = BlowupCenter::subbundle_at_zero(&amb, &[0]).unwrap();
        assert_eq!(center.codimension(), 2);
        let bl = build_blowup(amb.clone(), center).unwrap();
        let e = bl.generator("E").unwrap();
        // curve in a threefold: E³ = -deg N, and N = 𝒪(1) ⊕ 𝒪 here
        assert_eq!(intersect(&bl, &[&e, &e, &e]).unwrap(), int(-1));
        assert!(BlowupCenter::subbundle_at_zero(&amb, &[0, 1]).is_err());
    }
}
