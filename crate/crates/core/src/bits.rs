//! Dense square bit matrix used as the adjacency of binary relations.

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct BitMatrix {
    n: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub(crate) fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitMatrix {
            n,
            words,
            data: vec![0; n * words],
        }
    }

    pub(crate) fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub(crate) fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize, j: usize) {
        self.data[i * self.words + j / 64] |= 1 << (j % 64);
    }

    #[inline]
    pub(crate) fn clear(&mut self, i: usize, j: usize) {
        self.data[i * self.words + j / 64] &= !(1 << (j % 64));
    }

    pub(crate) fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    /// `row(i) |= row(k)`
    pub(crate) fn or_row_into(&mut self, k: usize, i: usize) {
        if i == k {
            return;
        }
        let w = self.words;
        let (src, dst) = if k < i {
            let (a, b) = self.data.split_at_mut(i * w);
            (&a[k * w..(k + 1) * w], &mut b[..w])
        } else {
            let (a, b) = self.data.split_at_mut(k * w);
            (&b[..w], &mut a[i * w..(i + 1) * w])
        };
        for (d, s) in dst.iter_mut().zip(src) {
            *d |= *s;
        }
    }

    /// `row(a) ⊆ row(b)`
    pub(crate) fn row_subset(&self, a: usize, b: usize) -> bool {
        self.row(a)
            .iter()
            .zip(self.row(b))
            .all(|(x, y)| x & !y == 0)
    }

    pub(crate) fn row_is_empty(&self, i: usize) -> bool {
        self.row(i).iter().all(|&w| w == 0)
    }

    pub(crate) fn row_count(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn row_iter(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(i).iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub(crate) fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::new(self.n);
        for i in 0..self.n {
            for j in self.row_iter(i) {
                t.set(j, i);
            }
        }
        t
    }

    /// Warshall's closure on row bitsets.
    pub(crate) fn transitive_closure(&mut self) {
        for k in 0..self.n {
            for i in 0..self.n {
                if self.get(i, k) {
                    self.or_row_into(k, i);
                }
            }
        }
    }

    pub(crate) fn is_transitive(&self) -> bool {
        (0..self.n).all(|i| self.row_iter(i).all(|j| self.row_subset(j, i)))
    }
}
