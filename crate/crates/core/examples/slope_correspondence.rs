//! W1 against mu(E) - mu(F) for every sub-direct-sum of a few split bundles
//! over P^1.

use fibstab::arith::{fmt_q, int};
use fibstab::invariants::df_fibration_expansion;
use fibstab::models::{all_subsum_degenerations, make_projectivised_fibration, slope_sheaf, SplitBundle};

fn main() -> fibstab::Result<()> {
    for degrees in [vec![0, -1], vec![2, 0, -1], vec![1, 1, -2], vec![3, 0, 0, -3]] {
        let rows: Vec<Vec<i64>> = degrees.iter().map(|&d| vec![d]).collect();
        let e = SplitBundle::over_product(&[1], &rows)?;
        let l = e.base().generator("h")?;
        let x = make_projectivised_fibration(&e, &l)?;
        let mu_e = slope_sheaf(&e, None, &l)?;
        println!("E = {degrees:?}, mu(E) = {}", fmt_q(&mu_e));
        for d in all_subsum_degenerations(&x)? {
            let f = d.subsheaf.clone().unwrap();
            let mu_f = slope_sheaf(&e, Some(&f), &l)?;
            let w1 = df_fibration_expansion(&d)?.w1;
            let gap = &mu_e - &mu_f;
            let ratio = if gap == int(0) {
                "-".to_string()
            } else {
                fmt_q(&(&w1 / (gap * int(f.len() as i64))))
            };
            println!("  F = {f:?}: mu(F) = {:>4}  W1 = {:>6}  W1 / (rk F (mu(E) - mu(F))) = {ratio}", fmt_q(&mu_f), fmt_q(&w1));
        }
    }
    Ok(())
}
