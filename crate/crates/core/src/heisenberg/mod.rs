//! The algebra `H(q)` on generators `A`, `B` with `AB - qBA = I`.

mod convert;
mod element;
mod free;
mod monomial;
mod multiply;

pub use convert::{
    ba_to_cbasis, cbasis_factors, cbasis_to_free, element_to_ba, oracle_product, to_element,
};
pub use element::Element;
pub use free::{
    reduce_word, reduce_word_with, BaNormalForm, FreePoly, FreeWord, Letter, Reducer,
    RewriteStrategy,
};
pub use monomial::Monomial;
pub use multiply::monomial_product;

/// Grade of a basis monomial: `B`-degree minus `A`-degree.
pub fn grade(m: Monomial) -> i32 {
    m.grade()
}
