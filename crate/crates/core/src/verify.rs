//! Replays of the worked examples and the identity suites, used by `verify-paper`.

use std::time::{Duration, Instant};

use crate::affine_weyl::ExtendedAffineElement;
use crate::context::Context;
use crate::error::Result;
use crate::lattice::{AffineRoot, Coweight, Root};
use crate::nilhecke::{DeltaElement, NilHeckeElement};
use crate::peterson::QuantumClass;
use crate::scalars::{Polynomial, RationalFunction};

/// 1 − α1A1 − (α1+α2)A2 − … as (coefficient, word) pairs.
pub const DELTA_123: &[(&str, &str)] = &[
    ("1", ""),
    ("-a1", "1"),
    ("-(a1+a2)", "2"),
    ("-(a1+a2+a3)", "3"),
    ("a1*(a1+a2)", "12"),
    ("a1*(a1+a2+a3)", "13"),
    ("(a1+a2)*(a1+a2+a3)", "23"),
    ("-a1*(a1+a2)*(a1+a2+a3)", "123"),
];

/// j(ξ_{210}) in affine A3, grouped by coefficient.
pub const PIERI_210: &[(&str, &[&str])] = &[
    ("1", &["210", "321", "032", "103"]),
    ("a3", &["2103", "3213", "0323"]),
    ("a2+a3", &["2102", "3212", "1032"]),
    ("a1+a2+a3", &["2101", "0321", "1031"]),
    ("a3*(a2+a3)", &["21023", "32123", "10323"]),
    ("a3*(a1+a2+a3)", &["21031", "03231"]),
    ("(a2+a3)*(a1+a2+a3)", &["21012", "03212", "10312"]),
    ("a3*(a2+a3)*(a1+a2+a3)", &["210123", "032123", "103123"]),
];

#[derive(Clone, Debug, Default)]
pub struct Options {
    /// Substring filter on check groups and names.
    pub filter: Option<String>,
    /// Replace ξ^w(v) by the positive convention (sign flip on odd ℓ(w)).
    pub mutate_xi_sign: bool,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub group: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

type CheckFn = fn(&Options) -> std::result::Result<String, String>;

pub const CHECKS: &[(&str, &str, CheckFn)] = &[
    ("pieri", "delta expansion of s1s2s3 in A3", check_delta_123),
    ("pieri", "Pieri expansion j(xi_210) in affine A3", check_pieri_210),
    ("pieri", "non-equivariant Pieri uniqueness", check_pieri_uniqueness),
    ("a1", "A1 quantum product and h^2 = q + a h", check_a1),
    ("oracle", "A-basis products against the delta oracle", check_oracle_products),
    ("oracle", "scalar commutation against the delta oracle", check_oracle_commutation),
    ("oracle", "translation identities in the delta oracle", check_product2),
    ("affine", "affine Weyl identities and lengths", check_affine),
    ("jmap", "j-map centrality and closed forms", check_jmap),
    ("peterson", "Peterson equivariance and grading", check_peterson_equivariance),
    ("peterson", "quantum products via homology", check_quantum_products),
];

pub fn run(opts: &Options) -> Vec<Outcome> {
    CHECKS
        .iter()
        .filter(|(g, n, _)| opts.filter.as_deref().is_none_or(|f| g.contains(f) || n.contains(f)))
        .map(|(group, name, f)| {
            let t = Instant::now();
            let res = f(opts);
            let elapsed = t.elapsed();
            let (passed, detail) = match res {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            Outcome { group, name, passed, detail, elapsed }
        })
        .collect()
}

fn ctx(t: &str) -> std::result::Result<Context, String> {
    Context::new(t).map_err(|e| e.to_string())
}

fn e2s<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn word(c: &Context, digits: &str) -> ExtendedAffineElement {
    let gens: Vec<usize> = digits.chars().map(|d| d.to_digit(10).unwrap() as usize).collect();
    c.mul_word(&gens)
}

fn expect_eq<T: PartialEq>(a: &T, b: &T, what: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if a == b {
        Ok(())
    } else {
        Err(what())
    }
}

/// δ_x in the A-basis, with the optional sign mutation.
fn delta_expansion(c: &Context, x: &ExtendedAffineElement, opts: &Options) -> NilHeckeElement {
    let d = c.delta_to_a(x);
    if !opts.mutate_xi_sign {
        return d;
    }
    let mut r = NilHeckeElement::zero();
    for (y, p) in d.terms() {
        let p = if c.length(y) % 2 == 1 { -p } else { p.clone() };
        r.add_term(*y, &p);
    }
    r
}

fn literal(c: &Context, groups: &[(&str, &[&str])]) -> std::result::Result<NilHeckeElement, String> {
    let mut r = NilHeckeElement::zero();
    for (coeff, words) in groups {
        let p = e2s(c.parse_poly(coeff))?;
        for w in *words {
            let x = word(c, w);
            if c.length(&x) != w.len() {
                return Err(format!("word {w} is not reduced"));
            }
            r.add_term(x, &p);
        }
    }
    Ok(r)
}

fn check_delta_123(opts: &Options) -> std::result::Result<String, String> {
    let c = ctx("A3")?;
    let groups: Vec<(&str, &[&str])> = DELTA_123.iter().map(|(p, w)| (*p, std::slice::from_ref(w))).collect();
    let expect = literal(&c, &groups)?;
    let got = delta_expansion(&c, &word(&c, "123"), opts);
    expect_eq(&got, &expect, || format!("got {}", c.format_nh(&got)))?;
    Ok(format!("{} terms", got.len()))
}

fn check_pieri_210(opts: &Options) -> std::result::Result<String, String> {
    let c = ctx("A3")?;
    let vi = e2s(c.v_of_node(1))?;
    let exp = delta_expansion(&c, &c.weyl(c.w.inverse(vi)), opts);
    let got = e2s(c.j_pieri_with_expansion(1, &exp))?;
    let expect = literal(&c, PIERI_210)?;
    expect_eq(&got, &expect, || format!("got {}", c.format_nh(&got)))?;
    Ok(format!("{} terms", got.len()))
}

fn check_pieri_uniqueness(_: &Options) -> std::result::Result<String, String> {
    let mut n = 0;
    for t in ["A1", "A2"] {
        let c = ctx(t)?;
        for x in c.waffm_up_to_length(5, None) {
            for i in c.rs.minuscule_nodes().iter().copied() {
                e2s(c.nonequiv_pieri(i, &x))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} cases"))
}

fn check_a1(_: &Options) -> std::result::Result<String, String> {
    let c = ctx("A1")?;
    let s = c.w.gen(1);
    let q = QuantumClass::term(&[], vec![1], c.w.identity(), Polynomial::one());
    let rhs = e2s(c.quantum_cominuscule_product(1, s, &[]))?;
    expect_eq(&rhs, &q, || format!("theorem side {}", c.format_quantum(&rhs)))?;
    let lhs = e2s(c.cominuscule_lhs(1, s, &[]))?;
    expect_eq(&lhs, &q, || format!("h(h-a) = {}", c.format_quantum(&lhs)))?;
    let h = QuantumClass::term(&[], vec![0], s, Polynomial::one());
    let sq = e2s(c.quantum_product_homology(&h, &h))?;
    let expect = q.add(&h.scale(&Polynomial::var(1)));
    expect_eq(&sq, &expect, || format!("h^2 = {}", c.format_quantum(&sq)))?;
    Ok("h^2 = q + a1*h".into())
}

fn oracle_elements(c: &Context, max: usize) -> Vec<ExtendedAffineElement> {
    c.elements_up_to_length(max)
}

fn check_oracle_products(_: &Options) -> std::result::Result<String, String> {
    let mut n = 0;
    for t in ["A1", "A2"] {
        let c = ctx(t)?;
        let elems = oracle_elements(&c, 4);
        let deltas: Vec<DeltaElement> = elems.iter().map(|x| c.basis_to_delta(x)).collect();
        for (x, dx) in elems.iter().zip(&deltas) {
            for (y, dy) in elems.iter().zip(&deltas) {
                let a = c.nh_mul(&NilHeckeElement::basis(*x), &NilHeckeElement::basis(*y));
                let o = c.delta_mul(dx, dy);
                if c.to_delta(&a) != o {
                    return Err(format!("{t}: {} * {}", c.format_elem(x), c.format_elem(y)));
                }
                n += 1;
            }
        }
    }
    Ok(format!("{n} pairs"))
}

fn check_oracle_commutation(_: &Options) -> std::result::Result<String, String> {
    let mut n = 0;
    for t in ["A1", "A2"] {
        let c = ctx(t)?;
        for x in oracle_elements(&c, 4) {
            for i in 1..=c.rank() {
                let l = c.fundamental_weight_poly(i).clone();
                let got = e2s(c.commute_scalar(&x, &l))?;
                let o = c.delta_mul(&c.basis_to_delta(&x), &DeltaElement::term(c.identity(), RationalFunction::from_poly(l.clone())));
                if c.to_delta(&got) != o {
                    return Err(format!("{t}: {} * w{i}", c.format_elem(&x)));
                }
                if c.basis_times_poly(&x, &l) != got {
                    return Err(format!("{t}: recursion and covers formula differ at {}", c.format_elem(&x)));
                }
                n += 1;
            }
        }
    }
    Ok(format!("{n} cases"))
}

fn dt(c: &Context, l: Coweight) -> DeltaElement {
    DeltaElement::delta(c.translation(l))
}

fn inv_gamma(g: &Root) -> RationalFunction {
    RationalFunction::one().div_linear(g.coords()).unwrap()
}

fn check_product2(_: &Options) -> std::result::Result<String, String> {
    let c = ctx("A2")?;
    let r = c.rank();
    let one = DeltaElement::delta(c.identity());
    let mut roots: Vec<Root> = c.rs.positive_roots().to_vec();
    roots.extend(c.rs.positive_roots().iter().map(|a| -*a));
    let lambdas: Vec<Coweight> = vec![
        Coweight::new(&[1, 0]),
        Coweight::new(&[0, 1]),
        Coweight::new(&[-1, 2]),
        Coweight::new(&[2, -1]),
        Coweight::new(&[-2, -1]),
    ];
    let mut n = 0;
    for g in &roots {
        let gv = c.rs.coroot(g).unwrap();
        let s = c.reflection(g).unwrap();
        for k in -1..=2 {
            let b = AffineRoot::new(*g, k);
            let a = e2s(c.delta_a_alpha(&b))?;
            for l in &lambdas {
                let sl = c.w.act_coweight(s, l);
                // (1)
                let lhs = c.delta_mul(&a, &dt(&c, *l));
                let rhs = c.delta_mul(&dt(&c, sl), &a).add(&dt(&c, *l).sub(&dt(&c, sl)).scale(&inv_gamma(g)));
                expect_eq(&lhs, &rhs, || format!("(1) fails for {b} and {l}"))?;
                // (2)
                let p = g.pair(l);
                let lhs = dt(&c, *l).sub(&dt(&c, sl));
                let rhs = c.delta_mul(&dt(&c, *l), &one.sub(&dt(&c, gv.scale(-p))));
                expect_eq(&lhs, &rhs, || format!("(2) fails for {g} and {l}"))?;
                n += 2;
            }
        }
        // (3)
        for m in 1..=4 {
            let lhs = one.sub(&dt(&c, gv.scale(m)));
            let sum = (0..m).fold(DeltaElement::zero(), |acc, k| acc.add(&dt(&c, gv.scale(k))));
            let rhs = c.delta_mul(&sum, &one.sub(&dt(&c, gv)));
            expect_eq(&lhs, &rhs, || format!("(3) fails for {g}, n={m}"))?;
            n += 1;
        }
        // (4)
        let aa = e2s(c.delta_a_alpha(&AffineRoot::new(*g, 0)))?;
        let ab = e2s(c.delta_a_alpha(&AffineRoot::new(-*g, 1)))?;
        let gm = RationalFunction::from_poly(Polynomial::linear(&g.coords()[..r]));
        let inner = aa.sub(&c.delta_mul(&aa.scale(&gm), &ab)).add(&ab);
        let lhs = one.sub(&dt(&c, -gv));
        expect_eq(&lhs, &inner.scale(&gm), || format!("(4) fails for {g}"))?;
        n += 1;
    }
    Ok(format!("{n} identities"))
}

/// Inversions with level bounded by ℓ(x)+1, by direct enumeration.
fn count_inversions(c: &Context, x: &ExtendedAffineElement) -> usize {
    let top = c.length(x) as i32 + 1;
    let mut n = 0;
    for a in c.rs.positive_roots() {
        for g in [*a, -*a] {
            let start = if g.is_positive() { 0 } else { 1 };
            for k in start..=top {
                if !c.act_affine_root(x, &AffineRoot::new(g, k)).is_positive() {
                    n += 1;
                }
            }
        }
    }
    n
}

fn check_affine(_: &Options) -> std::result::Result<String, String> {
    let mut n = 0;
    for t in ["A2", "B2"] {
        let c = ctx(t)?;
        for a in c.rs.positive_roots().iter().flat_map(|a| [*a, -*a]) {
            let lhs = c.translation(c.rs.coroot(&a).unwrap());
            let rhs = c.mul(&e2s(c.affine_reflection(&AffineRoot::new(-a, 1)))?, &c.weyl(c.reflection(&a).unwrap()));
            expect_eq(&lhs, &rhs, || format!("{t}: t_a = s_(e-a) s_a fails for {a}"))?;
            n += 1;
        }
        let s0 = c.mul(&c.translation(c.rs.highest_coroot()), &c.weyl(c.s_theta()));
        expect_eq(&c.gen(0), &s0, || format!("{t}: s0 = t_theta s_theta fails"))?;
        n += 1;
    }
    for t in ["A1", "A2"] {
        let c = ctx(t)?;
        for x in c.elements_up_to_length(6) {
            let k = count_inversions(&c, &x);
            expect_eq(&c.length(&x), &k, || format!("{t}: length of {}", c.format_elem(&x)))?;
            n += 1;
        }
    }
    Ok(format!("{n} checks"))
}

/// Antidominant μ with ℓ(t_μ) ≤ max.
pub fn antidominant_coweights(c: &Context, max: usize) -> Vec<Coweight> {
    let r = c.rank();
    let mut out = Vec::new();
    let mut cur = vec![0i32; r];
    loop {
        let neg: Vec<i32> = cur.iter().map(|x| -x).collect();
        let m = Coweight::new(&neg);
        if c.length(&c.translation(m)) <= max {
            out.push(m);
        }
        let mut k = 0;
        loop {
            if k == r {
                return out;
            }
            cur[k] += 1;
            if cur[k] as usize <= max {
                break;
            }
            cur[k] = 0;
            k += 1;
        }
    }
}

/// j(ξ_w) ≡ Ã_w modulo ⊕_{v≠e} Ã·A_v.
pub fn congruent_to_basis(c: &Context, j: &NilHeckeElement, w: &ExtendedAffineElement) -> bool {
    j.coeff(w) == Polynomial::one() && j.terms().all(|(y, _)| y == w || !c.is_in_waffm(y))
}

fn check_jmap(_: &Options) -> std::result::Result<String, String> {
    let mut n = 0;
    for t in ["A1", "A2"] {
        let c = ctx(t)?;
        for m in antidominant_coweights(&c, 6) {
            let x = c.translation(m);
            let j = e2s(c.j_ad_translation(&m))?;
            if !c.centralizes(&j) || !congruent_to_basis(&c, &j, &x) {
                return Err(format!("{t}: translation class {m}"));
            }
            let s = e2s(c.solve_j_general(&x))?;
            expect_eq(&s, &j, || format!("{t}: solver differs at {m}"))?;
            n += 1;
        }
    }
    for (t, nodes) in [("A1", vec![1]), ("A2", vec![1, 2]), ("A3", vec![1, 3])] {
        let c = ctx(t)?;
        for i in nodes {
            let p = e2s(c.j_pieri(i))?;
            let tau = e2s(c.tau(i))?.elem;
            let w = c.mul(&c.mul(&tau, &c.weyl(e2s(c.v_of_node(i))?)), &c.inverse(&tau));
            if !c.centralizes(&p) || !congruent_to_basis(&c, &p, &w) {
                return Err(format!("{t}: Pieri element for node {i}"));
            }
            let s = e2s(c.solve_j_general(&w))?;
            expect_eq(&s, &p, || format!("{t}: solver differs from Pieri at node {i}"))?;
            n += 1;
        }
    }
    Ok(format!("{n} j-images"))
}

fn check_peterson_equivariance(_: &Options) -> std::result::Result<String, String> {
    let mut n = 0;
    for t in ["A1", "A2"] {
        let c = ctx(t)?;
        for x in c.waffm_up_to_length(5, Some(0)) {
            let xi = e2s(c.xi(&x))?;
            let image = e2s(c.peterson_map(&xi, &[]))?;
            for u in c.w.elements() {
                let lhs = e2s(c.peterson_map(&c.pushforward(u, &xi), &[]))?;
                let rhs = c.weyl_star_action(u, &image);
                expect_eq(&lhs, &rhs, || format!("{t}: u={} at {}", c.w.format(u), c.format_elem(&x)))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} cases"))
}

fn check_quantum_products(_: &Options) -> std::result::Result<String, String> {
    let mut n = 0;
    for (t, nodes) in [("A1", vec![]), ("A2", vec![2]), ("A2", vec![])] {
        let c = ctx(t)?;
        let zero_q = vec![0; c.rank() - nodes.len()];
        for i in c.rs.minuscule_nodes().iter().copied() {
            let vi = c.w.min_coset_rep(e2s(c.v_of_node(i))?, &nodes);
            for w in c.w.min_coset_reps(&nodes) {
                let rhs = e2s(c.quantum_cominuscule_product(i, w, &nodes))?;
                let a = QuantumClass::term(&nodes, zero_q.clone(), vi, Polynomial::one());
                let b = QuantumClass::term(&nodes, zero_q.clone(), w, Polynomial::one());
                let lhs = e2s(c.quantum_product_homology(&a, &b))?.specialize_zero();
                expect_eq(&lhs, &rhs, || format!("{t} {nodes:?}: i={i} w={}: {} vs {}", c.w.format(w), c.format_quantum(&lhs), c.format_quantum(&rhs)))?;
                let eq = e2s(c.cominuscule_lhs(i, w, &nodes))?;
                expect_eq(&eq, &rhs, || format!("{t} {nodes:?}: equivariant i={i} w={}", c.w.format(w)))?;
                n += 2;
            }
        }
    }
    // ℙ²: [pt]·[pt] = q·h and [pt]·h = q
    let c = ctx("A2")?;
    let pt = QuantumClass::term(&[2], vec![0], c.w.from_word(&[2, 1]).unwrap(), Polynomial::one());
    let h = QuantumClass::term(&[2], vec![0], c.w.gen(1), Polynomial::one());
    let pp = e2s(c.quantum_product_homology(&pt, &pt))?.specialize_zero();
    let ph = e2s(c.quantum_product_homology(&pt, &h))?.specialize_zero();
    expect_eq(&pp, &QuantumClass::term(&[2], vec![1], c.w.gen(1), Polynomial::one()), || format!("pt*pt = {}", c.format_quantum(&pp)))?;
    expect_eq(&ph, &QuantumClass::term(&[2], vec![1], c.w.identity(), Polynomial::one()), || format!("pt*h = {}", c.format_quantum(&ph)))?;
    Ok(format!("{} products", n + 2))
}
