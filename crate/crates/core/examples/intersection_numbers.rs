//! Intersection numbers on a Hirzebruch surface and on a rank-3 bundle over
//! P^1 x P^1, by the Chow-ring integral and by reduction to the point class.

use std::sync::Arc;

use fibstab::arith::{fmt_q, int};
use fibstab::chow::{to_profile, ChowModel, DivisorClass};
use num_traits::Zero;

fn main() -> fibstab::Result<()> {
    // F_1 = P(O + O(-1)) over P^1.
    let base = Arc::new(ChowModel::projective_product(&[1]));
    let summands = vec![DivisorClass::from_coeffs(vec![int(0)]), DivisorClass::from_coeffs(vec![int(-1)])];
    let f1 = ChowModel::projective_bundle(base, summands)?;
    let h = f1.generator("h")?;
    let xi = f1.generator("xi")?;
    println!("F_1: dim {}, generators {:?}", f1.dimension(), f1.generator_names());
    for (name, a, b) in [("xi^2", &xi, &xi), ("xi.h", &xi, &h), ("h^2", &h, &h)] {
        let direct = f1.intersect(&[a, b])?;
        let reduced = f1.intersect_by_reduction(&[a, b])?;
        println!("  {name:5} = {:>3}   (by reduction {})", fmt_q(&direct), fmt_q(&reduced));
    }
    let k = f1.canonical().clone();
    println!("  K = {:?}, K^2 = {}", k.coeffs().iter().map(fmt_q).collect::<Vec<_>>(), fmt_q(&f1.intersect(&[&k, &k])?));

    // P(O + O(1,0) + O(0,-1)) over P^1 x P^1.
    let base = Arc::new(ChowModel::projective_product(&[1, 1]));
    let d = |a: i64, b: i64| DivisorClass::from_coeffs(vec![int(a), int(b)]);
    let x = ChowModel::projective_bundle(base, vec![d(0, 0), d(1, 0), d(0, -1)])?;
    let classes = [("h1", x.generator("h1")?), ("h2", x.generator("h2")?), ("xi", x.generator("xi")?)];
    let named: Vec<(&str, &DivisorClass)> = classes.iter().map(|(n, c)| (*n, c)).collect();
    let profile = to_profile(&x, &named)?;
    println!("\nP(O + O(1,0) + O(0,-1)) over P^1 x P^1, dim {}", profile.dimension());
    for (mono, v) in profile.entries() {
        if !v.is_zero() {
            println!("  {mono:?} -> {}", fmt_q(v));
        }
    }
    let h_big = &(&classes[2].1 + &classes[0].1) + &classes[1].1;
    println!("  (xi + h1 + h2)^4 = {}", fmt_q(&x.intersect_powers(&[(&h_big, 4)])?));
    Ok(())
}
