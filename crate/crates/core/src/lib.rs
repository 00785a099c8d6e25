pub mod error;
pub mod free_group;
pub mod kernel;
pub mod laurent;
pub mod matrix;
pub mod perm;
pub mod rep;
pub mod word;

pub use error::{Error, Result};
pub use laurent::{ComplexValue, LaurentPoly, ModularValue, Unit, MODULUS};
pub use matrix::{ComplexMatrix, ModularMatrix, PolyMatrix};
pub use perm::Permutation;
pub use free_group::{ConjugacyCertificate, FreeAutomorphism, FreeLetter, FreeWord};
pub use word::{relation_instances, GenKind, GenLetter, GenWord, Relation, RelationFamily};
pub use rep::{build_generator, evaluate_word, word_to_automorphism, BasisIndexer, ModularGenerators, RepImage};
pub use kernel::{
    expand_shape, match_shape, search_kernel, search_kernel_report, verify_kernel, verify_kernel_with, ABlock,
    Conclusion, KernelVerdict, SearchConfig, SearchReport, SearchStats, ShapeSpec, ShapeVariant,
    KERNEL_WORD_N3, KERNEL_WORD_N4, T_WORD,
};
