//! The blockwise inverse formula: the essential matrices split into four
//! diagonal column groups with restricted selection matrices, summed back
//! into the same inverse the direct route produces.
//!
//! Run with `cargo run --example blockwise_formula`.

use tph_inverse::assembly::{
    blockwise_from_essentials, partition_essentials, pinv_tph_from_essentials, run_pipeline,
};
use tph_inverse::pi::build_pi;
use tph_inverse::problem::{Sign, TphProblem};

fn main() -> tph_inverse::Result<()> {
    let prob = TphProblem::scalar(3, 3, &[1, -1, 0, 1, 1, 1, -1], &[1, 0, -1, 1, 0, 0, 1])?;
    let pl = run_pipeline(&prob)?;

    let part = partition_essentials(&pl.ess, &pl.conf.l);
    println!("diagonal groups (index powers per group): {:?}", part.d_groups);

    let pi = build_pi(&pl.table);
    for (g, restriction) in pi.group_restrictions.iter().enumerate() {
        println!(
            "selection restriction for group {g} ({}x{}):\n{restriction}",
            restriction.rows(),
            restriction.cols()
        );
    }

    for sign in [Sign::Plus, Sign::Minus] {
        let direct = pinv_tph_from_essentials(&prob, &pl.ess, &pl.conf.l, &pl.table, sign)?;
        let blockwise = blockwise_from_essentials(&prob, &pl.ess, &pl.conf.l, &pl.table, sign)?;
        println!("sign {sign}: blockwise equals direct: {}", direct == blockwise);
        println!("inverse =\n{direct}");
    }
    Ok(())
}
