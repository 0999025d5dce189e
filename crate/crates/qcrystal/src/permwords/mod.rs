//! Permutations of ℤ, word classes, lengths, and Coxeter-Knuth moves.

mod classes;
mod fpf;
mod grassmannian;
mod perm;
mod word;

pub use classes::{
    atoms, enumerate_words, equivalence_class, fpf_conjugate, fpf_product, in_class, involution_product,
    is_fpf_involution_word, is_involution_word, is_reduced_word, is_valid_word, length_invariants, not_in_class,
    reduced_product, word_target, word_to_permutation, Flavor, LengthInvariants, Relation, Target,
};
pub use fpf::{fpf_base, FpfInvolution};
pub use grassmannian::{is_fpf_grassmannian, is_inv_grassmannian};
pub use perm::Permutation;
pub use word::Word;
