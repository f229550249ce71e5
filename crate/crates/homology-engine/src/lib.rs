//! Reduced simplicial homology over the 2-element field, plus joins,
//! suspensions and homological connectivity estimates.
//!
//! Betti numbers come from bit-packed Gaussian elimination on the boundary
//! matrices. Large complexes are first shrunk by a homotopy-preserving
//! free-face reduction pass; elementary collapses do not change reduced
//! homology, so the ranks are computed on the much smaller core.

mod betti;
mod gf2;
mod homology;
mod join;
pub mod reduce;

pub use betti::BettiVector;
pub use gf2::Gf2Mat;
pub use homology::{
    boundary_matrices, connectivity_estimate, euler_char, reduced_betti, reduced_betti_capped,
    ChainComplexGf2, ConnectivityEstimate,
};
pub use join::{join_complexes, suspension, two_point_complex};

pub(crate) mod fnv {
    use std::hash::{BuildHasher, Hasher};

    /// FNV-1a; the standard hasher is needlessly slow for the short
    /// `Vec<u32>` keys used throughout.
    pub struct Fnv(u64);

    impl Hasher for Fnv {
        #[inline]
        fn write(&mut self, bytes: &[u8]) {
            for &b in bytes {
                self.0 ^= b as u64;
                self.0 = self.0.wrapping_mul(0x100_0000_01b3);
            }
        }
        #[inline]
        fn finish(&self) -> u64 {
            self.0
        }
    }

    #[derive(Clone, Default)]
    pub struct FnvBuild;

    impl BuildHasher for FnvBuild {
        type Hasher = Fnv;
        fn build_hasher(&self) -> Fnv {
            Fnv(0xcbf2_9ce4_8422_2325)
        }
    }

    pub type FnvMap<K, V> = std::collections::HashMap<K, V, FnvBuild>;
}
