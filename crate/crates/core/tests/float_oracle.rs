//! Cross-check the exact zero test against numerical evaluation at the
//! primitive root exp(2*pi*i/n).

use ffdesign::cyclotomic::Cyc;
use ffdesign::Int;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy)]
struct C(f64, f64);

impl C {
    fn add(self, o: C) -> C {
        C(self.0 + o.0, self.1 + o.1)
    }
    fn mul(self, o: C) -> C {
        C(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0)
    }
    fn abs(self) -> f64 {
        self.0.hypot(self.1)
    }
}

fn eval(elem: &Cyc<Int>) -> C {
    let n = elem.order();
    let mut acc = C(0.0, 0.0);
    for (k, c) in elem.coeffs().iter().enumerate() {
        let c: f64 = c.to_string().parse().unwrap();
        let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
        acc = acc.add(C(c, 0.0).mul(C(theta.cos(), theta.sin())));
    }
    acc
}

#[test]
fn is_zero_agrees_with_numerical_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..2000 {
        let n = rng.gen_range(1..=12usize);
        let coeffs: Vec<Int> = (0..n).map(|_| Int::from(rng.gen_range(-2..=2))).collect();
        let elem = Cyc::new(n, coeffs);
        let numeric = eval(&elem).abs();
        if elem.is_zero() {
            assert!(numeric < 1e-9, "exact zero but |value| = {numeric}");
        } else {
            assert!(numeric > 1e-9, "exact nonzero but |value| = {numeric}");
        }
    }
}

#[test]
fn arithmetic_agrees_with_numerical_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..500 {
        let n = rng.gen_range(1..=12usize);
        let a = Cyc::new(n, (0..n).map(|_| Int::from(rng.gen_range(-2..=2))).collect());
        let b = Cyc::new(n, (0..n).map(|_| Int::from(rng.gen_range(-2..=2))).collect());
        let sum = eval(&a).add(eval(&b));
        let prod = eval(&a).mul(eval(&b));
        assert!((eval(&a.add(&b)).0 - sum.0).abs() < 1e-6);
        assert!((eval(&a.add(&b)).1 - sum.1).abs() < 1e-6);
        assert!((eval(&a.mul(&b)).0 - prod.0).abs() < 1e-6);
        assert!((eval(&a.mul(&b)).1 - prod.1).abs() < 1e-6);
        // conjugation commutes with evaluation
        let conj = eval(&a.conj());
        assert!((conj.0 - eval(&a).0).abs() < 1e-6);
        assert!((conj.1 + eval(&a).1).abs() < 1e-6);
    }
}
