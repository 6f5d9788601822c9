//! Drive the identity catalog programmatically.
//!
//! Every identity has a string id and a typed parameter list; `run_check`
//! returns a machine-readable report. The same catalog backs the `verify`
//! and `grid` subcommands of the CLI. Run with:
//! cargo run --example identity_catalog

use hypersum::registry::{list_identities, run_check, Bindings, CheckOptions};

fn main() -> hypersum::Result<()> {
    println!("catalog holds {} identities\n", list_identities().len());

    let mut bindings = Bindings::new();
    bindings.insert("a".into(), "1".into());
    bindings.insert("c".into(), "4".into());
    bindings.insert("family".into(), "2:1".into());
    let report = run_check("entry9-ext", &bindings, &CheckOptions::default())?;
    println!("{}\n", serde_json::to_string_pretty(&report).unwrap());

    // A small sweep: the even terminating sum is independent of d, so every
    // point must pass.
    let options = CheckOptions::default();
    let mut pass = 0;
    for n in 0..=5 {
        for d in ["1", "2", "5", "7/2"] {
            let mut b = Bindings::new();
            b.insert("n".into(), n.to_string());
            b.insert("a".into(), "3/2".into());
            b.insert("d".into(), d.into());
            let report = run_check("f32-even", &b, &options)?;
            assert_eq!(report.verdict, "pass");
            pass += 1;
        }
    }
    println!("f32-even sweep: {pass}/{pass} points pass");

    // Out-of-domain parameters are rejected with a typed error rather than
    // silently regularized.
    let mut b = Bindings::new();
    b.insert("n".into(), "0".into());
    b.insert("a".into(), "1".into());
    b.insert("d".into(), "0".into());
    match run_check("f32-odd", &b, &options) {
        Err(e) => println!("f32-odd at d=0 is rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
