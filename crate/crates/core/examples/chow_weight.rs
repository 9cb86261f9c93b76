//! The leading weight coefficient b00 against H^(m+1).L^n.

use fibstab::arith::fmt_q;
use fibstab::invariants::chow_weight;
use fibstab::models::{all_subsum_degenerations, make_projectivised_fibration, SplitBundle};
use fibstab::oracle::{fit_h_and_w, GridSpec};

fn main() -> fibstab::Result<()> {
    let cases: [(&[usize], Vec<Vec<i64>>); 4] = [
        (&[1], vec![vec![0], vec![-1]]),
        (&[1], vec![vec![1], vec![0], vec![-1]]),
        (&[2], vec![vec![0], vec![1]]),
        (&[1, 1], vec![vec![0, 0], vec![1, -1]]),
    ];
    for (dims, rows) in cases {
        let e = SplitBundle::over_product(dims, &rows)?;
        let l = e.base().class(&e.base().generator_names().iter().map(|n| (n.as_str(), 1)).collect::<Vec<_>>())?;
        let x = make_projectivised_fibration(&e, &l)?;
        for d in all_subsum_degenerations(&x)? {
            let fp = fit_h_and_w(&d, &GridSpec::default())?;
            let c = chow_weight(&d, Some(&fp))?;
            println!(
                "base {dims:?}, E = {rows:?}, F = {:?}: H^(m+1).L^n = {}, b00 = {}, ratio {} (expected {})",
                d.subsheaf.as_ref().unwrap(),
                fmt_q(&c.intersection),
                fmt_q(c.fitted_b00.as_ref().unwrap()),
                fmt_q(c.constant.as_ref().unwrap()),
                fmt_q(&c.expected_constant)
            );
        }
    }
    Ok(())
}
