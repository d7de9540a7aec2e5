#![allow(dead_code)]

use std::sync::Arc;

use centaut::corpus::Corpus;
use centaut::group::FiniteGroupView;
use centaut::pc::PcPresentation;

pub fn presentation(name: &str) -> Arc<PcPresentation> {
    Arc::clone(&Corpus::builtin().get(name).unwrap().presentation)
}

pub fn view(name: &str) -> Arc<FiniteGroupView> {
    FiniteGroupView::from_presentation(presentation(name)).unwrap()
}

pub fn non_abelian_views() -> Vec<Arc<FiniteGroupView>> {
    Corpus::builtin()
        .entries()
        .map(|e| FiniteGroupView::from_presentation(Arc::clone(&e.presentation)).unwrap())
        .filter(|g| !g.is_abelian())
        .collect()
}

pub fn all_views() -> Vec<Arc<FiniteGroupView>> {
    Corpus::builtin()
        .entries()
        .map(|e| FiniteGroupView::from_presentation(Arc::clone(&e.presentation)).unwrap())
        .collect()
}

/// `∏ C_{p^{e_i}}` as a pc presentation: each factor is a chain of
/// generators with `g_j^p = g_{j+1}`.
pub fn abelian_presentation(p: u64, exponents: &[u32]) -> PcPresentation {
    let n: usize = exponents.iter().map(|&e| e as usize).sum();
    let mut powers = Vec::new();
    let mut start = 0;
    for &e in exponents {
        for k in 0..e as usize - 1 {
            let mut v = vec![0i64; n];
            v[start + k + 1] = 1;
            powers.push((start + k + 1, v));
        }
        start += e as usize;
    }
    let name = format!("abelian-{p}-{exponents:?}");
    PcPresentation::new(name, p, n, &powers, &[]).unwrap()
}

pub fn abelian_view(p: u64, exponents: &[u32]) -> Arc<FiniteGroupView> {
    if exponents.is_empty() {
        return FiniteGroupView::from_cayley_table("trivial", p as u32, &[vec![0]]).unwrap();
    }
    FiniteGroupView::from_presentation(Arc::new(abelian_presentation(p, exponents))).unwrap()
}

/// All partitions of `k` as non-increasing exponent lists.
pub fn partitions(k: u32, max: u32) -> Vec<Vec<u32>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=k.min(max)).rev() {
        for mut rest in partitions(k - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every abelian type at `p` of order at most `bound`.
pub fn types_up_to(p: u64, bound: u64) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut k = 0;
    while p.pow(k) <= bound {
        out.extend(partitions(k, k));
        k += 1;
    }
    out
}

/// `∏ Z/p^{e_i}` as plain coordinate vectors.
pub struct Model {
    pub moduli: Vec<u64>,
}

impl Model {
    pub fn new(p: u64, exps: &[u32]) -> Self {
        Model {
            moduli: exps.iter().map(|&e| p.pow(e)).collect(),
        }
    }

    pub fn order(&self) -> u64 {
        self.moduli.iter().product()
    }

    fn decode(&self, mut x: u64) -> [u64; 6] {
        let mut v = [0; 6];
        for (c, &m) in v.iter_mut().zip(&self.moduli) {
            *c = x % m;
            x /= m;
        }
        v
    }

    fn encode(&self, v: &[u64]) -> u64 {
        self.moduli
            .iter()
            .zip(v)
            .rev()
            .fold(0, |acc, (&m, &c)| acc * m + c % m)
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        let (mut a, b) = (self.decode(a), self.decode(b));
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
        self.encode(&a)
    }

    fn scale(&self, a: u64, k: u64) -> u64 {
        let mut v = self.decode(a);
        for x in &mut v {
            *x *= k;
        }
        self.encode(&v)
    }
}

/// `|Hom(Z/m, B)|` by testing additivity of `k -> k y` on every pair.
pub fn cyclic_hom_count(m: u64, b: &Model) -> u64 {
    (0..b.order())
        .filter(|&y| {
            (0..m).all(|i| {
                (0..m).all(|j| b.scale(y, (i + j) % m) == b.add(b.scale(y, i), b.scale(y, j)))
            })
        })
        .count() as u64
}

/// Counts tuples of generator images whose induced map is additive on
/// every element and every generator step (including wrap-around).
pub fn full_hom_count(a: &Model, b: &Model) -> u64 {
    let k = a.moduli.len();
    let total = b.order().pow(k as u32);
    let mut count = 0;
    for t in 0..total {
        let mut rest = t;
        let ys: Vec<u64> = (0..k)
            .map(|_| {
                let y = rest % b.order();
                rest /= b.order();
                y
            })
            .collect();
        let f = |x: u64| {
            a.decode(x)
                .iter()
                .zip(&ys)
                .fold(0, |acc, (&c, &y)| b.add(acc, b.scale(y, c)))
        };
        let ok = (0..a.order()).all(|x| {
            let mut v = a.decode(x);
            (0..k).all(|i| {
                v[i] += 1;
                let stepped = a.encode(&v);
                v[i] -= 1;
                f(stepped) == b.add(f(x), ys[i])
            })
        });
        if ok {
            count += 1;
        }
    }
    count
}
