use citer_core::engine::*;
use citer_core::quad::QuadratureConfig;
use citer_core::series::*;
use num_complex::Complex64;
use std::time::Instant;

fn c(re: f64, im: f64) -> Complex64 { Complex64::new(re, im) }

fn main() {
    let cfg = QuadratureConfig::default();
    let fq = f_q();
    let pi = std::f64::consts::PI;

    let t0 = Instant::now();
    let z2 = power_iterated_integral(&fq, c(2.0, 0.0), 0.0, &cfg).unwrap();
    println!("zeta(2) err {:.3e}  est {:.1e}  ({:?})", (z2.value.re - pi*pi/6.0).abs(), z2.error, t0.elapsed());

    let t0 = Instant::now();
    let z4 = power_iterated_integral(&fq, c(4.0, 0.0), 0.0, &cfg).unwrap();
    println!("zeta(4) err {:.3e}  ({:?})", (z4.value.re - pi.powi(4)/90.0).abs(), t0.elapsed());

    // complex s
    let t0 = Instant::now();
    let zc = power_iterated_integral(&fq, c(2.0, 3.0), 0.0, &cfg).unwrap();
    println!("zeta(2+3i) = {}  ({:?})", zc.value, t0.elapsed());

    // CorHaar worst case k=8, s=2+3i
    let t0 = Instant::now();
    let m8 = power_iterated_integral(&monomial(8), c(2.0, 3.0), 0.0, &cfg).unwrap();
    let expect = citer_core::power::pw(c(8.0,0.0), c(-2.0,-3.0));
    println!("CorHaar k=8 s=2+3i err {:.3e}  ({:?})", (m8.value - expect).norm(), t0.elapsed());

    // mult iterativity k=2 s=4
    let t0 = Instant::now();
    let mi = multiplicative_iterativity_eval(&fq, 2, c(4.0, 0.0), 1e-6, &cfg).unwrap();
    println!("mult-iter k=2 s=4: |lhs-rhs| {:.3e} pass={} ({:?})", mi.abs_error, mi.passed(), t0.elapsed());
    let t0 = Instant::now();
    let mi3 = multiplicative_iterativity_eval(&fq, 3, c(6.0, 0.0), 1e-5, &cfg).unwrap();
    println!("mult-iter k=3 s=6: |lhs-rhs| {:.3e} pass={} ({:?})", mi3.abs_error, mi3.passed(), t0.elapsed());

    // depth-2 MZV: zeta(2,1)=zeta(3) -> ascending (1,2)
    let t0 = Instant::now();
    let w = SlotWeight::plain(f_q());
    let m = multiple_iterated_integral_depth2(&w, c(1.0,0.0), &w, c(2.0,0.0), &cfg.relaxed(100.0)).unwrap();
    println!("zeta(2,1) err {:.3e}  est {:.1e} ({:?})", (m.value.re - 1.2020569031595943).abs(), m.error, t0.elapsed());

    let t0 = Instant::now();
    let m22 = multiple_iterated_integral_depth2(&w, c(2.0,0.0), &w, c(2.0,0.0), &cfg.relaxed(100.0)).unwrap();
    println!("zeta(2,2) err {:.3e}  ({:?})", (m22.value.re - pi.powi(4)/120.0).abs(), t0.elapsed());

    // dedekind D=-4 s=2
    let t0 = Instant::now();
    let fk = ideal_count_series(-4).unwrap();
    let zk = power_iterated_integral(&fk, c(2.0,0.0), 0.0, &cfg).unwrap();
    let catalan = 0.9159655941772190;
    println!("zeta_Q(i)(2) err {:.3e}  ({:?})", (zk.value.re - pi*pi/6.0*catalan).abs(), t0.elapsed());

    // polylog 2.5 complex w
    let t0 = Instant::now();
    let wpt = c(0.3, 0.4);
    let path = citer_core::path::Path::segment_to(wpt).unwrap();
    let li = polylog_integral(c(2.5,0.0), wpt, &path, &cfg).unwrap();
    let mut oracle = c(0.0,0.0);
    let mut wn = c(1.0, 0.0);
    for n in 1..2000 { wn *= wpt; oracle += wn / (n as f64).powf(2.5); }
    println!("Li_2.5(0.3+0.4i) err {:.3e}  ({:?})", (li.value - oracle).norm(), t0.elapsed());
}
