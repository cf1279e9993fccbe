use affsym::{Context, Polynomial, Weight};
use proptest::prelude::*;

const TYPES: &[&str] = &["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"];

#[test]
fn null_root_is_theta_plus_alpha0() {
    for t in TYPES {
        let c = Context::new(t).unwrap();
        let rs = &c.rs;
        let a0 = rs.affine_simple_root(0);
        assert!((a0.finite + rs.highest_root()).is_zero(), "{t}");
        assert_eq!(a0.level, 1, "{t}");
    }
}

#[test]
fn reflections_permute_positive_roots() {
    for t in TYPES {
        let c = Context::new(t).unwrap();
        let pos = c.rs.positive_roots();
        for a in pos {
            let s = c.reflection(a).unwrap();
            assert_eq!(c.w.act_root(s, a), -*a);
            let mut all: Vec<_> = pos.iter().flat_map(|b| [*b, -*b]).collect();
            let mut img: Vec<_> = all.iter().map(|b| c.w.act_root(s, b)).collect();
            all.sort();
            img.sort();
            assert_eq!(img, all, "{t}: s_{a} permutes R");
        }
        // only simple reflections keep R+ minus the root stable
        for i in 1..=c.rank() {
            let a = c.rs.simple_root(i);
            let s = c.w.gen(i);
            assert!(pos.iter().filter(|b| **b != a).all(|b| c.w.act_root(s, b).is_positive()), "{t}: s_{i}");
        }
        assert_eq!(pos.len(), c.w.length(c.w.longest()), "{t}");
    }
}

#[test]
fn minuscule_elements() {
    for t in TYPES {
        let c = Context::new(t).unwrap();
        for &i in c.rs.minuscule_nodes() {
            let vi = c.v_of_node(i).unwrap();
            let others: Vec<usize> = (1..=c.rank()).filter(|&j| j != i).collect();
            assert!(c.w.is_min_coset_rep(vi, &others));
            let max = c.w.min_coset_reps(&others).into_iter().map(|w| c.w.length(w)).max().unwrap();
            assert_eq!(c.w.length(vi), max, "{t}: v_{i} is maximal");
            let fi = c.f_of_node(i).unwrap();
            assert_eq!(c.w.inverse(vi), c.v_of_node(fi).unwrap(), "{t}: v_{i}^-1 = v_{fi}");
        }
    }
}

#[test]
fn bruhat_same_length_is_equality() {
    for t in ["A3", "B3", "G2"] {
        let c = Context::new(t).unwrap();
        let all: Vec<_> = c.w.elements().collect();
        for &u in &all {
            for &v in &all {
                if c.w.length(u) == c.w.length(v) {
                    assert_eq!(c.w.bruhat_leq(u, v), u == v);
                }
            }
        }
    }
}

#[test]
fn pairing_examples() {
    let c = Context::new("A2").unwrap();
    for i in 1..=2 {
        for j in 1..=2 {
            let p = c.rs.pairing(&c.rs.fundamental_weight(i), &c.rs.simple_coroot(j)).unwrap();
            assert_eq!(p, affsym::Rational::from_integer((i == j) as i64));
        }
    }
    let w = Weight::new(&[1, -1]);
    assert!(c.rs.pairing(&w, &c.rs.highest_coroot()).unwrap().numer() == &0.into());
}

fn type_and_words() -> impl Strategy<Value = (usize, Vec<usize>, Vec<usize>)> {
    (0..TYPES.len()).prop_flat_map(|k| {
        let r: usize = TYPES[k][1..].parse().unwrap();
        (Just(k), prop::collection::vec(1..=r, 0..10), prop::collection::vec(1..=r, 0..10))
    })
}

proptest! {
    #[test]
    fn length_is_subadditive((k, a, b) in type_and_words()) {
        let c = Context::new(TYPES[k]).unwrap();
        let u = c.w.from_word(&a).unwrap();
        let v = c.w.from_word(&b).unwrap();
        let uv = c.w.mul(u, v);
        prop_assert!(c.w.length(uv) <= c.w.length(u) + c.w.length(v));
        prop_assert_eq!(c.w.length(c.w.inverse(u)), c.w.length(u));
        prop_assert!(c.w.length(u) <= a.len());
    }

    #[test]
    fn weyl_action_on_scalars_is_invertible((k, a, _b) in type_and_words(), coeffs in prop::collection::vec(-3i32..=3, 4)) {
        let c = Context::new(TYPES[k]).unwrap();
        let u = c.w.from_word(&a).unwrap();
        let r = c.rank();
        let lin = Polynomial::linear(&coeffs[..r.min(4)]);
        let p = &(&lin * &lin) + &Polynomial::var(1);
        let q = c.w.act_poly(u, &p);
        prop_assert_eq!(c.w.act_poly(c.w.inverse(u), &q), p);
        // roots go to Q, so integral α-coefficients stay integral
        prop_assert!(q.is_integral());
    }
}
