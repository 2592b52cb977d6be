use citer_core::monodromy::*;
use citer_core::quad::QuadratureConfig;
use num_complex::Complex64;
use std::time::Instant;
fn cx(re: f64, im: f64) -> Complex64 { Complex64::new(re, im) }
fn main() {
    let cfg = QuadratureConfig::default();
    for (s, w, eta) in [
        (cx(2.0,0.0), cx(0.5,0.0), 0.8),
        (cx(3.0,0.0), cx(0.5,0.0), 0.8),
        (cx(2.5,0.0), cx(0.4,0.2), 0.75),
    ] {
        let t0 = Instant::now();
        let sc = MonodromyScenario::new(s, w, eta, 1e-3, 30).unwrap();
        let d = monodromy_defect(&sc, &cfg).unwrap();
        println!("s={s} w={w}: |defect-predicted| = {:.3e}  branch {}  budget {:.1e}  ({:?})",
            (d.defect - d.predicted).norm(), d.matched_branch, d.error_budget, t0.elapsed());
    }
}
