//! Larger tables. Run with `cargo test -p thom --test extended -- --ignored`.

use thom::golden;
use thom::run::{plan, verify_table};

fn check(name: &str) {
    let table = golden::builtin(name).unwrap();
    let verdict = verify_table(&table, &plan(&table.singularity, true, None));
    assert!(verdict.passed(), "{verdict}");
}

macro_rules! extended {
    ($($test:ident => $table:literal),* $(,)?) => {
        $(
            #[test]
            #[ignore]
            fn $test() {
                check($table);
            }
        )*
    };
}

extended! {
    iii33_r5 => "appendix1-r5",
    iii33_r6 => "appendix1-r6",
    iii33_r7 => "appendix1-r7",
    i23_r5 => "appendix2-r5",
    i23_r6 => "appendix2-r6",
    i23_r7 => "appendix2-r7",
}
