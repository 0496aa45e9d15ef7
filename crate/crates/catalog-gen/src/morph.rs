//! Backtracking search for isomorphisms between Cayley tables; streams every
//! automorphism when source and target coincide.

use crate::table::{invariants, Invariants, Table};

/// Search scaffolding for a source group: a generating sequence, a closure
/// order with one defining product per element, and invariant keys. Owns its
/// table so deduplication can store contexts side by side.
pub struct MorphCtx {
    t: Table,
    pub inv: Invariants,
    gens: Vec<usize>,
    elems: Vec<u8>,
    defs: Vec<(u8, u8)>,
    level_end: Vec<usize>,
}

impl MorphCtx {
    pub fn new(t: Table) -> MorphCtx {
        let inv = invariants(&t);
        let n = t.order();
        let gens = t.minimal_gens();
        // Closure sweep per generator prefix; defs[i] = (parent position,
        // generator index) with elems[i] = elems[parent]·gens[index], so an
        // image of the generators extends to all of H_i in closure order.
        let mut elems: Vec<u8> = vec![0];
        let mut defs: Vec<(u8, u8)> = vec![(0, 0)];
        let mut level_end = Vec::new();
        let mut in_sub = vec![false; n];
        in_sub[0] = true;
        for (i, _) in gens.iter().enumerate() {
            let mut pos = 0;
            while pos < elems.len() {
                let x = elems[pos] as usize;
                for (j, &gj) in gens[..=i].iter().enumerate() {
                    let y = t.mul(x, gj);
                    if !in_sub[y] {
                        in_sub[y] = true;
                        elems.push(y as u8);
                        defs.push((pos as u8, j as u8));
                    }
                }
                pos += 1;
            }
            level_end.push(elems.len());
        }
        assert!(gens.is_empty() || *level_end.last().unwrap() == n);
        MorphCtx {
            t,
            inv,
            gens,
            elems,
            defs,
            level_end,
        }
    }

    pub fn table(&self) -> &Table {
        &self.t
    }

    pub fn into_table(self) -> Table {
        self.t
    }
}

/// Calls `visit` with every isomorphism source → target, as an image array
/// indexed by source element; a `true` return stops the search. Returns
/// whether a visit stopped it (so "is isomorphic" = stop at the first hit).
pub fn for_each_isomorphism(
    src: &MorphCtx,
    dst: &Table,
    dst_keys: &[u32],
    visit: &mut dyn FnMut(&[u8]) -> bool,
) -> bool {
    let n = src.t.order();
    if n != dst.order() {
        return false;
    }
    let img = vec![0u8; n];
    if src.gens.is_empty() {
        return visit(&img);
    }
    let mut state = Search {
        src,
        dst,
        dst_keys,
        img,
        gen_img: Vec::with_capacity(src.gens.len()),
        used: 1,
    };
    state.level(0, visit)
}

struct Search<'a> {
    src: &'a MorphCtx,
    dst: &'a Table,
    dst_keys: &'a [u32],
    img: Vec<u8>,
    gen_img: Vec<u8>,
    used: u64,
}

impl Search<'_> {
    fn level(&mut self, i: usize, visit: &mut dyn FnMut(&[u8]) -> bool) -> bool {
        let src = self.src;
        let g = src.gens[i];
        let lo = if i == 0 { 1 } else { src.level_end[i - 1] };
        let hi = src.level_end[i];
        let n = src.t.order();
        for y in 0..n {
            if self.dst_keys[y] != src.inv.keys[g] || self.used & (1 << y) != 0 {
                continue;
            }
            self.gen_img.push(y as u8);
            // Extend over this level's new elements by their definitions,
            // enforcing injectivity and key agreement.
            let mut placed = 0u64;
            let mut ok = true;
            for idx in lo..hi {
                let e = src.elems[idx] as usize;
                let (ppos, j) = src.defs[idx];
                let parent = src.elems[ppos as usize] as usize;
                let t = self
                    .dst
                    .mul(self.img[parent] as usize, self.gen_img[j as usize] as usize);
                if self.dst_keys[t] != src.inv.keys[e] || self.used & (1 << t) != 0 {
                    ok = false;
                    break;
                }
                self.img[e] = t as u8;
                placed |= 1 << t;
                self.used |= 1 << t;
            }
            // Homomorphism property, incrementally: new elements against all
            // generators so far, old elements against the new generator. The
            // union over levels covers every (element, generator) pair, which
            // forces a homomorphism on the whole closure.
            if ok {
                'hom: for idx in 0..hi {
                    let e = src.elems[idx] as usize;
                    let j_lo = if idx < lo { i } else { 0 };
                    for j in j_lo..=i {
                        let gj = src.gens[j];
                        let lhs = self.img[src.t.mul(e, gj)];
                        let rhs = self
                            .dst
                            .mul(self.img[e] as usize, self.gen_img[j] as usize);
                        if lhs as usize != rhs {
                            ok = false;
                            break 'hom;
                        }
                    }
                }
            }
            if ok {
                let stop = if i + 1 == src.gens.len() {
                    visit(&self.img)
                } else {
                    self.level(i + 1, visit)
                };
                if stop {
                    self.used &= !placed;
                    self.gen_img.pop();
                    return true;
                }
            }
            self.used &= !placed;
            self.gen_img.pop();
        }
        false
    }
}

/// True when the two tables are isomorphic; callers should gate on equal
/// fingerprints first to keep the search rare.
pub fn isomorphic(src: &MorphCtx, dst: &Table, dst_keys: &[u32]) -> bool {
    for_each_isomorphism(src, dst, dst_keys, &mut |_| true)
}

/// Streams every automorphism of the context's own table.
pub fn for_each_automorphism(ctx: &MorphCtx, f: &mut dyn FnMut(&[u8])) {
    for_each_isomorphism(ctx, ctx.table(), &ctx.inv.keys, &mut |phi| {
        f(phi);
        false
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::invariants;

    fn automorphism_count(t: Table) -> usize {
        let ctx = MorphCtx::new(t);
        let mut count = 0;
        for_each_automorphism(&ctx, &mut |phi| {
            debug_assert_eq!(phi[0], 0);
            count += 1;
        });
        count
    }

    #[test]
    fn automorphism_counts() {
        // |Aut(C₁₂)| = φ(12), |Aut(C₂³)| = |GL₃(F₂)|, |Aut(Q₈)| = S₄,
        // |Aut(D₄)| = D₄, |Aut(S₃)| = Inn(S₃), |Aut(C₂⁴)| = |GL₄(F₂)|.
        assert_eq!(automorphism_count(Table::trivial()), 1);
        assert_eq!(automorphism_count(Table::cyclic(12)), 4);
        let c2_cubed = Table::from_permutations(
            6,
            &[
                vec![1, 0, 2, 3, 4, 5],
                vec![0, 1, 3, 2, 4, 5],
                vec![0, 1, 2, 3, 5, 4],
            ],
        );
        assert_eq!(automorphism_count(c2_cubed), 168);
        let q8 = Table::from_permutations(
            8,
            &[vec![2, 3, 1, 0, 6, 7, 5, 4], vec![4, 5, 7, 6, 1, 0, 2, 3]],
        );
        assert_eq!(automorphism_count(q8), 24);
        let d4 = Table::from_permutations(4, &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]]);
        assert_eq!(automorphism_count(d4), 8);
        let s3 = Table::from_permutations(3, &[vec![1, 2, 0], vec![1, 0, 2]]);
        assert_eq!(automorphism_count(s3), 6);
        let c2_fourth = Table::from_permutations(
            8,
            &[
                vec![1, 0, 2, 3, 4, 5, 6, 7],
                vec![0, 1, 3, 2, 4, 5, 6, 7],
                vec![0, 1, 2, 3, 5, 4, 6, 7],
                vec![0, 1, 2, 3, 4, 5, 7, 6],
            ],
        );
        assert_eq!(automorphism_count(c2_fourth), 20160);
    }

    #[test]
    fn isomorphism_decisions() {
        let c6 = Table::cyclic(6);
        // C₂×C₃ on disjoint points is C₆ in disguise.
        let c2xc3 =
            Table::from_permutations(5, &[vec![1, 0, 2, 3, 4], vec![0, 1, 3, 4, 2]]);
        let inv = invariants(&c2xc3);
        assert_eq!(invariants(&c6).fingerprint, inv.fingerprint);
        assert!(isomorphic(&MorphCtx::new(c6), &c2xc3, &inv.keys));

        let s3 = Table::from_permutations(3, &[vec![1, 2, 0], vec![1, 0, 2]]);
        let inv = invariants(&s3);
        assert!(!isomorphic(&MorphCtx::new(Table::cyclic(6)), &s3, &inv.keys));

        let c4 = Table::cyclic(4);
        let klein = Table::from_permutations(4, &[vec![1, 0, 2, 3], vec![0, 1, 3, 2]]);
        let inv = invariants(&klein);
        assert!(!isomorphic(&MorphCtx::new(c4), &klein, &inv.keys));
    }
}
