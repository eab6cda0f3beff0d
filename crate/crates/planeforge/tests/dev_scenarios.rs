// Development smoke run over the currently defined catalog.
use planeforge::scenario::{catalog, run_scenario};
use planeforge::Tolerance;

#[test]
#[ignore]
fn smoke_all() {
    let tol = Tolerance::default();
    for def in catalog() {
        let v = run_scenario(def.id, 24, 42, &tol).unwrap();
        let med = v.relations.iter().map(|r| r.residual_median).fold(f64::NAN, f64::max);
        let pmed = v.relations.iter().map(|r| r.probe_margin_median).fold(f64::NAN, f64::min);
        println!(
            "{:<7} {:<13} done {:>3} skip {:>3}  med {:9.2e}  probe {:9.2e}",
            v.id, v.status.to_string(), v.trials_completed, v.trials_skipped, med, pmed
        );
        for r in &v.relations {
            if r.residual_median > 1e-8 || !(r.probe_margin_median > 1e-4) {
                println!("        <{}> med {:.2e} max {:.2e} probe {:.2e}", r.name, r.residual_median, r.residual_max, r.probe_margin_median);
            }
        }
    }
}
