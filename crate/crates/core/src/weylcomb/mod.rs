//! Signed permutations, k-strict partitions and root data of types B and C.

mod partition;
mod roots;
mod signed_perm;

pub use partition::{
    char_index, coset_rep, d_set, enumerate_sp_k, parse_parts, partition_to_w, w_to_partition,
    weyl_act, CharIndex, KStrictPartition,
};
pub use roots::{e_of_root, roots_up_to, LieType, Root};
pub use signed_perm::SignedPermutation;
