/// Dense matrix over the 2-element field with bit-packed rows.
#[derive(Clone)]
pub struct Gf2Mat {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl Gf2Mat {
    pub fn new(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64).max(1);
        Gf2Mat {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize) {
        self.data[i * self.words + j / 64] ^= 1 << (j % 64);
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.data[i * self.words + j / 64] >> (j % 64)) & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// Column echelon rank; consumes a working copy.
    pub fn rank(mut self) -> usize {
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let word = col / 64;
            let bit = 1u64 << (col % 64);
            // find pivot at or below `rank`
            let mut pivot = None;
            for r in rank..self.rows {
                if self.data[r * self.words + word] & bit != 0 {
                    pivot = Some(r);
                    break;
                }
            }
            let Some(p) = pivot else { continue };
            if p != rank {
                for w in word..self.words {
                    self.data.swap(p * self.words + w, rank * self.words + w);
                }
            }
            let (before, rest) = self.data.split_at_mut((rank + 1) * self.words);
            let pivot_row = &before[rank * self.words..];
            for r in rank + 1..self.rows {
                let off = (r - rank - 1) * self.words;
                if rest[off + word] & bit != 0 {
                    for w in word..self.words {
                        rest[off + w] ^= pivot_row[w];
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Sparse rank by column reduction on the lowest set entry; columns are
    /// strictly increasing row-index lists. Much faster than the dense
    /// elimination on large, very sparse boundary matrices.
    pub fn sparse_rank(rows: usize, columns: Vec<Vec<u32>>) -> usize {
        let mut pivot_owner: Vec<u32> = vec![u32::MAX; rows];
        let mut stored: Vec<Vec<u32>> = Vec::new();
        let mut rank = 0;
        let mut scratch: Vec<u32> = Vec::new();
        for mut col in columns {
            loop {
                let Some(&low) = col.last() else { break };
                let owner = pivot_owner[low as usize];
                if owner == u32::MAX {
                    pivot_owner[low as usize] = stored.len() as u32;
                    stored.push(col);
                    rank += 1;
                    break;
                }
                // col ^= stored[owner], merging sorted lists
                let other = &stored[owner as usize];
                scratch.clear();
                let (mut i, mut j) = (0usize, 0usize);
                while i < col.len() && j < other.len() {
                    match col[i].cmp(&other[j]) {
                        std::cmp::Ordering::Less => {
                            scratch.push(col[i]);
                            i += 1;
                        }
                        std::cmp::Ordering::Greater => {
                            scratch.push(other[j]);
                            j += 1;
                        }
                        std::cmp::Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                    }
                }
                scratch.extend_from_slice(&col[i..]);
                scratch.extend_from_slice(&other[j..]);
                std::mem::swap(&mut col, &mut scratch);
            }
        }
        rank
    }

    /// Matrix product over GF(2); used by the boundary-composition check.
    pub fn mul(&self, other: &Gf2Mat) -> Gf2Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Gf2Mat::new(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    let src = j * other.words;
                    let dst = i * out.words;
                    for w in 0..other.words {
                        out.data[dst + w] ^= other.data[src + w];
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_identity() {
        let mut m = Gf2Mat::new(5, 5);
        for i in 0..5 {
            m.set(i, i);
        }
        assert_eq!(m.rank(), 5);
    }

    #[test]
    fn rank_of_dependent_rows() {
        let mut m = Gf2Mat::new(3, 3);
        // rows: 110, 011, 101 -- third is the sum of the first two
        m.set(0, 0);
        m.set(0, 1);
        m.set(1, 1);
        m.set(1, 2);
        m.set(2, 0);
        m.set(2, 2);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rank_of_wide_matrix() {
        let mut m = Gf2Mat::new(2, 130);
        m.set(0, 0);
        m.set(0, 129);
        m.set(1, 129);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn sparse_rank_agrees_with_dense() {
        let mut state = 0x1234_5678_9abc_def0u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..40 {
            let rows = (next() % 24 + 1) as usize;
            let cols = (next() % 24 + 1) as usize;
            let mut dense = Gf2Mat::new(rows, cols);
            let mut sparse: Vec<Vec<u32>> = vec![Vec::new(); cols];
            for (j, col) in sparse.iter_mut().enumerate() {
                for i in 0..rows {
                    if next() % 4 == 0 {
                        dense.set(i, j);
                        col.push(i as u32);
                    }
                }
            }
            assert_eq!(Gf2Mat::sparse_rank(rows, sparse), dense.rank());
        }
    }
}
