use super::FinitePoset;

type Signature = (usize, usize, usize, usize, usize, usize);

fn signatures<L>(p: &FinitePoset<L>) -> Vec<Signature> {
    let height = p.heights();
    let mut depth = vec![0; p.len()];
    for &i in p.linear_extension().iter().rev() {
        depth[i] = p
            .upper_covers(i)
            .iter()
            .map(|&j| depth[j] + 1)
            .max()
            .unwrap_or(0);
    }
    (0..p.len())
        .map(|i| {
            (
                height[i],
                depth[i],
                p.down_set(i).count_ones(..),
                p.up_set(i).count_ones(..),
                p.lower_covers(i).len(),
                p.upper_covers(i).len(),
            )
        })
        .collect()
}

/// Searches for an order isomorphism `p → q`, returned as `map[i] = image of i`.
///
/// Plain backtracking: elements of `p` are placed in linear-extension order,
/// candidates must match a local invariant signature and, for non-minimal
/// elements, be an upper cover of an already placed lower cover's image.
pub fn are_isomorphic<A, B>(p: &FinitePoset<A>, q: &FinitePoset<B>) -> Option<Vec<usize>> {
    if p.len() != q.len() || p.covers().len() != q.covers().len() {
        return None;
    }
    let sp = signatures(p);
    let sq = signatures(q);
    let mut sorted_p = sp.clone();
    let mut sorted_q = sq.clone();
    sorted_p.sort_unstable();
    sorted_q.sort_unstable();
    if sorted_p != sorted_q {
        return None;
    }
    let mut search = Search {
        p,
        q,
        sp,
        sq,
        map: vec![usize::MAX; p.len()],
        used: vec![false; q.len()],
        placed: Vec::with_capacity(p.len()),
    };
    search.extend(0).then_some(search.map)
}

struct Search<'a, A, B> {
    p: &'a FinitePoset<A>,
    q: &'a FinitePoset<B>,
    sp: Vec<Signature>,
    sq: Vec<Signature>,
    map: Vec<usize>,
    used: Vec<bool>,
    placed: Vec<usize>,
}

impl<A, B> Search<'_, A, B> {
    fn consistent(&self, u: usize, v: usize) -> bool {
        self.placed.iter().all(|&w| {
            let img = self.map[w];
            self.p.leq(u, w) == self.q.leq(v, img) && self.p.leq(w, u) == self.q.leq(img, v)
        })
    }

    fn extend(&mut self, depth: usize) -> bool {
        let order = self.p.linear_extension();
        let Some(&u) = order.get(depth) else {
            return true;
        };
        let candidates: Vec<usize> = match self.p.lower_covers(u).first() {
            Some(&below) => self.q.upper_covers(self.map[below]).to_vec(),
            None => (0..self.q.len()).collect(),
        };
        for v in candidates {
            if self.used[v] || self.sp[u] != self.sq[v] || !self.consistent(u, v) {
                continue;
            }
            self.map[u] = v;
            self.used[v] = true;
            self.placed.push(u);
            if self.extend(depth + 1) {
                return true;
            }
            self.placed.pop();
            self.used[v] = false;
            self.map[u] = usize::MAX;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::fixtures::words;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn is_isomorphism<A, B>(p: &FinitePoset<A>, q: &FinitePoset<B>, map: &[usize]) -> bool {
        (0..p.len()).all(|i| (0..p.len()).all(|j| p.leq(i, j) == q.leq(map[i], map[j])))
    }

    #[test]
    fn identity_on_self() {
        let p = words(2, 3).into_poset();
        let map = are_isomorphic(&p, &p).unwrap();
        assert!(is_isomorphism(&p, &p, &map));
    }

    #[test]
    fn chain_vs_antichain() {
        assert!(are_isomorphic(&FinitePoset::chain(2), &FinitePoset::antichain(2)).is_none());
        assert!(are_isomorphic(&FinitePoset::chain(2), &FinitePoset::chain(3)).is_none());
    }

    #[test]
    fn boolean_square_is_chain_product() {
        let square = FinitePoset::product(&FinitePoset::chain(2), &FinitePoset::chain(2));
        let b2 = FinitePoset::boolean(2);
        let map = are_isomorphic(&square, &b2).unwrap();
        assert!(is_isomorphism(&square, &b2, &map));
    }

    #[test]
    fn w22_is_not_w13() {
        // Different shapes with equal sizes would be caught by the search.
        let a = words(1, 2).into_poset();
        let b = FinitePoset::chain(5);
        assert!(are_isomorphic(&a, &b).is_none());
    }

    proptest! {
        #[test]
        fn invariant_under_relabeling(m in 0u32..=2, n in 0usize..=3, seed in any::<u64>()) {
            let p = words(m, n).into_poset();
            let mut perm: Vec<usize> = (0..p.len()).collect();
            perm.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
            let q = p.permuted(&perm);
            let forward = are_isomorphic(&p, &q).expect("relabeled copy is isomorphic");
            prop_assert!(is_isomorphism(&p, &q, &forward));
            let back = are_isomorphic(&q, &p).expect("symmetric");
            prop_assert!(is_isomorphism(&q, &p, &back));
        }
    }
}
