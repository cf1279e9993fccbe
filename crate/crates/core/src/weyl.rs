//! The finite Weyl group, enumerated eagerly into tables.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{Coweight, Root};
use crate::root_data::RootSystem;
use crate::scalars::{Polynomial, RationalFunction};

pub const MAX_ORDER: usize = 1152;

/// An element of W, as an index into its group's tables.
///
/// Indices are ordered by length and then by shortlex reduced word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct WeylElement(pub(crate) u16);

impl WeylElement {
    pub fn index(&self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug)]
pub struct WeylGroup {
    rank: usize,
    order: usize,
    nroots: usize,
    /// Coweight action, `rank × rank` row-major per element.
    coweight_mats: Vec<i32>,
    /// Images of the simple roots, per element.
    simple_images: Vec<Vec<Root>>,
    simple_image_polys: Vec<Vec<Polynomial>>,
    /// Images of all roots (indices into the root list of the root system).
    perms: Vec<u16>,
    mult: Vec<u16>,
    inv: Vec<u16>,
    len: Vec<u8>,
    words: Vec<Vec<u8>>,
    left_gen: Vec<u16>,
    index: HashMap<Vec<i32>, u16>,
}

impl WeylGroup {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let r = rs.rank();
        let np = rs.num_positive_roots();
        let nroots = 2 * np;
        let gen_perm: Vec<Vec<u16>> = (1..=r)
            .map(|i| (0..nroots).map(|k| rs.root_index(&rs.reflect_root(i, &rs.root(k))).unwrap() as u16).collect())
            .collect();

        // Breadth-first enumeration by left multiplication.
        let id: Vec<u16> = (0..nroots as u16).collect();
        let mut perms_list = vec![id.clone()];
        let mut seen: HashMap<Vec<u16>, usize> = HashMap::from([(id, 0)]);
        let mut left: Vec<Vec<usize>> = Vec::new();
        let mut k = 0;
        while k < perms_list.len() {
            let mut row = Vec::with_capacity(r);
            for g in &gen_perm {
                let p: Vec<u16> = perms_list[k].iter().map(|&x| g[x as usize]).collect();
                let next = seen.len();
                let idx = *seen.entry(p.clone()).or_insert_with(|| {
                    perms_list.push(p);
                    next
                });
                if perms_list.len() > MAX_ORDER {
                    return Err(Error::GroupTooLarge(MAX_ORDER));
                }
                row.push(idx);
            }
            left.push(row);
            k += 1;
        }
        let n = perms_list.len();
        let lens: Vec<u8> = perms_list.iter().map(|p| p[..np].iter().filter(|&&x| x as usize >= np).count() as u8).collect();

        // Shortlex-minimal words: the first letter is the smallest left descent.
        let mut by_len: Vec<usize> = (0..n).collect();
        by_len.sort_by_key(|&k| lens[k]);
        let mut words: Vec<Vec<u8>> = vec![Vec::new(); n];
        for &w in &by_len {
            if lens[w] == 0 {
                continue;
            }
            let i = (0..r).find(|&i| lens[left[w][i]] < lens[w]).unwrap();
            let mut word = vec![(i + 1) as u8];
            word.extend_from_slice(&words[left[w][i]]);
            words[w] = word;
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| lens[a].cmp(&lens[b]).then_with(|| words[a].cmp(&words[b])));
        let mut pos = vec![0usize; n];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }

        let mut g = WeylGroup {
            rank: r,
            order: n,
            nroots,
            coweight_mats: vec![0; n * r * r],
            simple_images: Vec::with_capacity(n),
            simple_image_polys: Vec::with_capacity(n),
            perms: Vec::with_capacity(n * nroots),
            mult: vec![0; n * n],
            inv: vec![0; n],
            len: order.iter().map(|&o| lens[o]).collect(),
            words: order.iter().map(|&o| words[o].clone()).collect(),
            left_gen: vec![0; n * r],
            index: HashMap::new(),
        };
        for (new, &old) in order.iter().enumerate() {
            g.perms.extend_from_slice(&perms_list[old]);
            for i in 0..r {
                g.left_gen[new * r + i] = pos[left[old][i]] as u16;
            }
        }
        for w in 0..n {
            let images: Vec<Root> = (1..=r).map(|j| rs.root(g.perms[w * nroots + rs.root_index(&rs.simple_root(j)).unwrap()] as usize)).collect();
            g.simple_image_polys.push(images.iter().map(|x| Polynomial::linear(x.coords())).collect());
            g.simple_images.push(images);
            // Columns are images of the fundamental coweights.
            for m in 1..=r {
                let img = g.word_act_coweight(rs, w, &rs.fundamental_coweight(m));
                for k in 0..r {
                    g.coweight_mats[w * r * r + k * r + (m - 1)] = img.coords()[k];
                }
            }
            let key = g.coweight_mats[w * r * r..(w + 1) * r * r].to_vec();
            g.index.insert(key, w as u16);
        }
        for u in 0..n {
            for v in 0..n {
                let mut x = v;
                for &i in g.words[u].iter().rev() {
                    x = g.left_gen[x * r + i as usize - 1] as usize;
                }
                g.mult[u * n + v] = x as u16;
                if x == 0 {
                    g.inv[u] = v as u16;
                }
            }
        }
        Ok(g)
    }

    fn word_act_coweight(&self, rs: &RootSystem, w: usize, m: &Coweight) -> Coweight {
        let mut x = *m;
        for &i in self.words[w].iter().rev() {
            x = rs.reflect_coweight(i as usize, &x);
        }
        x
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> impl Iterator<Item = WeylElement> {
        (0..self.order as u16).map(WeylElement)
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement(0)
    }

    pub fn gen(&self, i: usize) -> WeylElement {
        self.left_mul_gen(i, self.identity())
    }

    pub fn longest(&self) -> WeylElement {
        WeylElement((self.order - 1) as u16)
    }

    pub fn mul(&self, u: WeylElement, v: WeylElement) -> WeylElement {
        WeylElement(self.mult[u.index() * self.order + v.index()])
    }

    pub fn left_mul_gen(&self, i: usize, w: WeylElement) -> WeylElement {
        WeylElement(self.left_gen[w.index() * self.rank + i - 1])
    }

    pub fn right_mul_gen(&self, w: WeylElement, i: usize) -> WeylElement {
        self.inverse(self.left_mul_gen(i, self.inverse(w)))
    }

    pub fn inverse(&self, w: WeylElement) -> WeylElement {
        WeylElement(self.inv[w.index()])
    }

    pub fn length(&self, w: WeylElement) -> usize {
        self.len[w.index()] as usize
    }

    /// Shortlex-minimal reduced word, 1-based letters.
    pub fn word(&self, w: WeylElement) -> &[u8] {
        &self.words[w.index()]
    }

    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut x = self.identity();
        for &i in word.iter().rev() {
            if i == 0 || i > self.rank {
                return Err(Error::NodeOutOfRange { node: i, rank: self.rank });
            }
            x = self.left_mul_gen(i, x);
        }
        Ok(x)
    }

    /// Looks an element up by its coweight action matrix (row-major).
    pub fn from_matrix(&self, m: &[i32]) -> Option<WeylElement> {
        self.index.get(m).map(|&k| WeylElement(k))
    }

    pub fn matrix(&self, w: WeylElement) -> &[i32] {
        let r2 = self.rank * self.rank;
        &self.coweight_mats[w.index() * r2..(w.index() + 1) * r2]
    }

    pub fn act_coweight(&self, w: WeylElement, m: &Coweight) -> Coweight {
        let r = self.rank;
        let a = self.matrix(w);
        let mut out = Coweight::zero(r);
        for k in 0..r {
            out.coords_mut()[k] = (0..r).map(|j| a[k * r + j] * m.coords()[j]).sum();
        }
        out
    }

    /// Image of the root with index `k` in the root system's list.
    pub fn act_root_index(&self, w: WeylElement, k: usize) -> usize {
        self.perms[w.index() * self.nroots + k] as usize
    }

    pub fn act_root(&self, w: WeylElement, r: &Root) -> Root {
        let mut out = Root::zero(self.rank);
        for (j, &c) in r.coords().iter().enumerate() {
            if c != 0 {
                out = out + self.simple_images[w.index()][j].scale(c);
            }
        }
        out
    }

    pub fn simple_images(&self, w: WeylElement) -> &[Root] {
        &self.simple_images[w.index()]
    }

    pub fn act_poly(&self, w: WeylElement, p: &Polynomial) -> Polynomial {
        if w.0 == 0 || p.is_constant() {
            return p.clone();
        }
        p.substitute(&self.simple_image_polys[w.index()])
    }

    pub fn act_ratfunc(&self, w: WeylElement, f: &RationalFunction) -> RationalFunction {
        if w.0 == 0 {
            return f.clone();
        }
        f.substitute(&self.simple_images[w.index()])
    }

    /// Whether w sends the positive root with index `k` to a negative root.
    pub fn is_inversion(&self, w: WeylElement, k: usize) -> bool {
        self.act_root_index(w, k) >= self.nroots / 2
    }

    pub fn has_left_descent(&self, w: WeylElement, i: usize) -> bool {
        self.length(self.left_mul_gen(i, w)) < self.length(w)
    }

    /// Subword-free Bruhat test via the lifting property.
    pub fn bruhat_leq(&self, u: WeylElement, v: WeylElement) -> bool {
        if self.length(u) > self.length(v) {
            return false;
        }
        if self.length(v) == 0 {
            return u == v;
        }
        let s = self.word(v)[0] as usize;
        let sv = self.left_mul_gen(s, v);
        let su = self.left_mul_gen(s, u);
        if self.length(su) < self.length(u) {
            self.bruhat_leq(su, sv)
        } else {
            self.bruhat_leq(u, sv)
        }
    }

    /// u ≤_L v: v = x·u with lengths adding.
    pub fn weak_left_leq(&self, u: WeylElement, v: WeylElement) -> bool {
        self.length(self.mul(v, self.inverse(u))) + self.length(u) == self.length(v)
    }

    pub fn parabolic_subgroup(&self, nodes: &[usize]) -> Vec<WeylElement> {
        self.elements().filter(|&w| self.word(w).iter().all(|&i| nodes.contains(&(i as usize)))).collect()
    }

    pub fn is_min_coset_rep(&self, w: WeylElement, nodes: &[usize]) -> bool {
        nodes.iter().all(|&i| self.length(self.right_mul_gen(w, i)) > self.length(w))
    }

    /// W^P: minimal length representatives of W/W_P.
    pub fn min_coset_reps(&self, nodes: &[usize]) -> Vec<WeylElement> {
        self.elements().filter(|&w| self.is_min_coset_rep(w, nodes)).collect()
    }

    /// The minimal length element of w·W_P.
    pub fn min_coset_rep(&self, w: WeylElement, nodes: &[usize]) -> WeylElement {
        let mut x = w;
        'outer: loop {
            for &i in nodes {
                let y = self.right_mul_gen(x, i);
                if self.length(y) < self.length(x) {
                    x = y;
                    continue 'outer;
                }
            }
            return x;
        }
    }

    /// Minimal coset representatives of W/W_μ, one per point of the orbit of μ.
    pub fn stabilizer_cosets(&self, m: &Coweight) -> Vec<WeylElement> {
        let mut best: HashMap<Coweight, WeylElement> = HashMap::new();
        for w in self.elements() {
            // elements are in increasing length order
            best.entry(self.act_coweight(w, m)).or_insert(w);
        }
        let mut out: Vec<WeylElement> = best.into_values().collect();
        out.sort();
        out
    }

    pub fn format(&self, w: WeylElement) -> String {
        format_word(self.word(w).iter().map(|&i| i as usize))
    }

    pub fn display(&self, w: WeylElement) -> impl fmt::Display + '_ {
        DisplayWord(self.format(w))
    }
}

struct DisplayWord(String);

impl fmt::Display for DisplayWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn format_word(word: impl Iterator<Item = usize>) -> String {
    let s: Vec<String> = word.map(|i| format!("s{i}")).collect();
    if s.is_empty() {
        "e".to_string()
    } else {
        s.join(" ")
    }
}

/// Extra data attached to minuscule nodes.
pub fn v_of_node(rs: &RootSystem, w: &WeylGroup, i: usize) -> Result<WeylElement> {
    rs.check_node(i)?;
    if !rs.is_minuscule(i) {
        return Err(Error::NotMinuscule(i));
    }
    let target = w.act_coweight(w.longest(), &rs.fundamental_coweight(i));
    Ok(w.elements().find(|&x| w.act_coweight(x, &rs.fundamental_coweight(i)) == target).unwrap())
}

/// The node f(i) with α_{f(i)} = −w₀(α_i).
pub fn f_of_node(rs: &RootSystem, w: &WeylGroup, i: usize) -> Result<usize> {
    rs.check_node(i)?;
    let img = -w.act_root(w.longest(), &rs.simple_root(i));
    Ok((1..=rs.rank()).find(|&j| rs.simple_root(j) == img).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(t: &str) -> (RootSystem, WeylGroup) {
        let rs = RootSystem::from_type(t.parse().unwrap()).unwrap();
        let w = WeylGroup::new(&rs).unwrap();
        (rs, w)
    }

    #[test]
    fn orders() {
        for (t, n) in [("A1", 2), ("A2", 6), ("A3", 24), ("B2", 8), ("B3", 48), ("C3", 48), ("D4", 192), ("G2", 12), ("F4", 1152)] {
            let (rs, w) = group(t);
            assert_eq!(w.order(), n, "{t}");
            assert_eq!(w.length(w.longest()), rs.num_positive_roots());
        }
        let rs = RootSystem::from_type("E6".parse().unwrap()).unwrap();
        assert!(matches!(WeylGroup::new(&rs), Err(Error::GroupTooLarge(_))));
    }

    #[test]
    fn words_and_lengths() {
        let (_, w) = group("A2");
        let w0 = w.from_word(&[1, 2, 1]).unwrap();
        assert_eq!(w0, w.longest());
        assert_eq!(w.length(w0), 3);
        assert_eq!(w.word(w0), &[1, 2, 1]);
        assert_eq!(w.format(w.identity()), "e");
        let (_, w) = group("A3");
        assert_eq!(w.length(w.longest()), 6);
        assert_eq!(w.format(w.longest()), "s1 s2 s1 s3 s2 s1");
    }

    #[test]
    fn bruhat_and_weak() {
        let (_, w) = group("A2");
        let s1 = w.gen(1);
        let s2 = w.gen(2);
        let s12 = w.mul(s1, s2);
        assert!(w.bruhat_leq(s1, w.longest()));
        assert!(!w.bruhat_leq(s12, s2));
        assert!(w.weak_left_leq(s2, s12));
        assert!(!w.weak_left_leq(s1, s12));
        for x in w.elements() {
            assert!(w.bruhat_leq(w.identity(), x));
            assert!(w.weak_left_leq(x, x));
        }
        let (_, w) = group("A3");
        let v = w.from_word(&[3, 2, 1]).unwrap();
        let below: Vec<String> = w.elements().filter(|&x| w.weak_left_leq(x, v)).map(|x| w.format(x)).collect();
        assert_eq!(below, vec!["e", "s1", "s2 s1", "s3 s2 s1"]);
    }

    #[test]
    fn cosets() {
        let (_, w) = group("A2");
        assert_eq!(w.min_coset_reps(&[]).len(), 6);
        let reps: Vec<String> = w.min_coset_reps(&[2]).iter().map(|&x| w.format(x)).collect();
        assert_eq!(reps, vec!["e", "s1", "s2 s1"]);
        let (_, w1) = group("A1");
        assert_eq!(w1.min_coset_reps(&[1]), vec![w1.identity()]);
        assert_eq!(w.min_coset_rep(w.longest(), &[2]), w.from_word(&[2, 1]).unwrap());
    }

    #[test]
    fn stabilizers() {
        let (rs, w) = group("A2");
        assert_eq!(w.stabilizer_cosets(&(-rs.fundamental_coweight(1))).len(), 3);
        assert_eq!(w.stabilizer_cosets(&Coweight::zero(2)).len(), 1);
        assert_eq!(w.stabilizer_cosets(&Coweight::new(&[-1, -1])).len(), 6);
    }

    #[test]
    fn minuscule_data() {
        let (rs, w) = group("A3");
        assert_eq!(w.format(v_of_node(&rs, &w, 1).unwrap()), "s3 s2 s1");
        assert_eq!(f_of_node(&rs, &w, 1).unwrap(), 3);
        let (rs, w) = group("A1");
        assert_eq!(w.format(v_of_node(&rs, &w, 1).unwrap()), "s1");
        let (rs, w) = group("B2");
        assert!(matches!(v_of_node(&rs, &w, 2), Err(Error::NotMinuscule(2))));
        for t in ["A3", "A4", "D4", "B3", "C3"] {
            let (rs, w) = group(t);
            for &i in rs.minuscule_nodes() {
                let v = v_of_node(&rs, &w, i).unwrap();
                let f = f_of_node(&rs, &w, i).unwrap();
                assert_eq!(w.inverse(v), v_of_node(&rs, &w, f).unwrap(), "{t} {i}");
                let others: Vec<usize> = (1..=rs.rank()).filter(|&j| j != i).collect();
                let reps = w.min_coset_reps(&others);
                assert!(reps.contains(&v));
                assert!(reps.iter().all(|&x| w.length(x) <= w.length(v)));
            }
        }
    }

    #[test]
    fn polynomial_action() {
        let (_, w) = group("A2");
        let a1 = Polynomial::var(1);
        let a2 = Polynomial::var(2);
        assert_eq!(w.act_poly(w.gen(1), &a1), -&a1);
        assert_eq!(w.act_poly(w.gen(1), &a2), &a1 + &a2);
        assert_eq!(w.act_poly(w.longest(), &a1), -&a2);
    }
}
