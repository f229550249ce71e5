/// Square bit matrix backing the closed order relation.
#[derive(Clone, PartialEq, Eq)]
pub(crate) struct BitMat {
    n: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMat {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitMat {
            n,
            words,
            data: vec![0; n * words],
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.data[i * self.words + j / 64] >> (j % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize) {
        self.data[i * self.words + j / 64] |= 1 << (j % 64);
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    /// Reflexive-transitive closure, bitwise Warshall.
    pub fn close(&mut self) {
        for i in 0..self.n {
            self.set(i, i);
        }
        for k in 0..self.n {
            let row_k = self.row(k).to_vec();
            for i in 0..self.n {
                if self.get(i, k) {
                    let base = i * self.words;
                    for (w, &bits) in row_k.iter().enumerate() {
                        self.data[base + w] |= bits;
                    }
                }
            }
        }
    }
}
