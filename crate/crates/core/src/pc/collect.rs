//! Collection to normal form.
//!
//! Collection from the left: the collected prefix is kept as an exponent
//! vector and the letters still to be multiplied sit on a stack. Multiplying
//! the prefix by `g_i` moves `g_i` left past every generator of larger index
//! using `g_j g_i = g_i g_j [g_j, g_i]`, then applies the power relation if
//! the exponent of `g_i` reaches `p`. Every rewrite only introduces letters
//! of index greater than `i`, which bounds the process.

use super::presentation::{GroupElement, PcPresentation};

impl PcPresentation {
    /// Multiplies the normal form in `acc` on the right by the word `word`
    /// (a sequence of 0-based generator letters).
    pub(crate) fn collect_word(&self, acc: &mut [u32], word: &[usize]) {
        let p = self.prime();
        let mut stack: Vec<usize> = word.iter().rev().copied().collect();
        let mut tail: Vec<usize> = Vec::new();
        while let Some(i) = stack.pop() {
            tail.clear();
            for (j, e) in acc.iter_mut().enumerate().skip(i + 1) {
                tail.extend(std::iter::repeat_n(j, *e as usize));
                *e = 0;
            }
            // Pending work after this step, in order: the power word of g_i
            // (on overflow), then each moved letter g_j followed by [g_j, g_i].
            for &j in tail.iter().rev() {
                stack.extend(self.comm_letters[j][i].iter().rev());
                stack.push(j);
            }
            acc[i] += 1;
            if acc[i] == p {
                acc[i] = 0;
                stack.extend(self.pow_letters[i].iter().rev());
            }
        }
    }

    /// `a * g_i` for a 0-based generator index.
    pub(crate) fn multiply_by_generator(&self, a: &GroupElement, i: usize) -> GroupElement {
        let mut out = a.clone();
        self.collect_word(out.raw_mut(), &[i]);
        out
    }

    /// Normal form of `a * b`.
    pub fn collect_product(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let word: Vec<usize> = b
            .exponents()
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize))
            .collect();
        let mut out = a.clone();
        self.collect_word(out.raw_mut(), &word);
        out
    }

    /// Inverse, solved one coordinate at a time: after clearing coordinate
    /// `i` by multiplying with `g_i^{p - e_i}`, coordinates below `i` stay 0.
    pub fn inverse(&self, a: &GroupElement) -> GroupElement {
        let p = self.prime();
        let mut acc = a.exponents().to_vec();
        let mut inv = vec![0u32; self.ngens()];
        for i in 0..self.ngens() {
            if acc[i] != 0 {
                let k = p - acc[i];
                inv[i] = k;
                let word = vec![i; k as usize];
                self.collect_word(&mut acc, &word);
            }
        }
        GroupElement::from_raw(inv)
    }

    /// `a^k`; negative `k` powers the inverse.
    pub fn power(&self, a: &GroupElement, k: i64) -> GroupElement {
        let base = if k < 0 { self.inverse(a) } else { a.clone() };
        let mut e = k.unsigned_abs();
        let mut result = self.identity();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                result = self.collect_product(&result, &sq);
            }
            e >>= 1;
            if e > 0 {
                sq = self.collect_product(&sq, &sq);
            }
        }
        result
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let ab = self.collect_product(a, b);
        let ba = self.collect_product(b, a);
        self.collect_product(&self.inverse(&ba), &ab)
    }

    /// Smallest `k >= 1` with `a^k = 1`. Always a power of `p` in a
    /// consistent presentation.
    pub fn element_order(&self, a: &GroupElement) -> u64 {
        let p = self.prime() as i64;
        let mut order = 1u64;
        let mut x = a.clone();
        while !x.is_identity() {
            x = self.power(&x, p);
            order *= p as u64;
            if order > self.order() {
                // only reachable for inconsistent presentations
                break;
            }
        }
        order
    }
}
