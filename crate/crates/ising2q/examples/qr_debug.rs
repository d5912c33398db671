use ising2q::{concurrence, ground_state, thermal_state, ModelParams};
use std::f64::consts::{FRAC_PI_2, PI};

fn c_of(b1: f64, b2: f64, t1: f64, t2: f64, t: f64) -> f64 {
    let p = ModelParams::new(1.0, b1, b2, t1, t2, t).unwrap();
    let rho = if t == 0.0 { ground_state(&p).unwrap() } else { thermal_state(&p).unwrap() };
    concurrence(&rho).unwrap().concurrence
}

fn main() {
    // criterion 8 ordering at theta = pi/2, B = J
    let c0 = c_of(1.0, 1.0, FRAC_PI_2, FRAC_PI_2, 0.0);
    let c001 = c_of(1.0, 1.0, FRAC_PI_2, FRAC_PI_2, 0.01);
    let c01 = c_of(1.0, 1.0, FRAC_PI_2, FRAC_PI_2, 0.1);
    let lim = 1.0 / (1.0f64 + 1.0).sqrt();
    println!("C(T=0)    = {c0:.17e}");
    println!("C(T=0.01) = {c001:.17e}");
    println!("C(T=0.1)  = {c01:.17e}");
    println!("analytic  = {lim:.17e}");
    println!("c01 < c001: {}   c001 < lim: {}   c001 < c0: {}", c01 < c001, c001 < lim, c001 < c0);

    // criterion 5 values (fig1a QPT signature)
    let th = 0.01 * PI;
    let c_low = c_of(0.1, 0.1, th, th, 0.0);
    let c_high = c_of(3.0, 3.0, th, th, 0.0);
    println!("fig1a C(B=0.1) = {c_low:.15}");
    println!("fig1a C(B=3.0) = {c_high:.15}");

    // criterion 6 values (fig1b)
    let c1b = c_of(0.01, 1.0005 * 0.01, th, th, 0.0);
    println!("fig1b C(B=0.01) = {c1b:.15}");
    // criterion 1: max err over 401 points
    let mut worst = 0.0f64;
    for k in 0..401 {
        let b = 0.01 + k as f64 * (4.0 - 0.01) / 400.0;
        let c = c_of(b, b, FRAC_PI_2, FRAC_PI_2, 0.0);
        let exact = 1.0 / (1.0 + b * b).sqrt();
        worst = worst.max((c - exact).abs());
    }
    println!("criterion 1 max err = {worst:.3e}");
}
