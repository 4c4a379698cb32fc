//! Reflection centralizers in Coxeter groups.
//!
//! Given a Coxeter diagram and a simple reflection `s`, the centralizer
//! `C_W(s)` splits as `<s> x (W_Omega : Gamma_Omega)`: `Gamma_Omega` is free
//! on the fundamental loops of `s`'s component of the odd diagram, and
//! `W_Omega` is a Coxeter group whose diagram is read off from classes of
//! "arrows" when that component is a tree.
//!
//! * [`diagram`]: diagrams, parsing, odd components, finite-type recognition,
//!   isomorphism.
//! * [`centralizer`]: arrows, arrow classes, the diagram of `W_Omega`, and
//!   the blow-up shortcut for trees of single edges.
//! * [`words`]: explicit generator words for the centralizer.
//! * [`tits`]: the Tits representation, word evaluation and a brute-force
//!   oracle for finite groups.
//! * [`verify`]: numeric checks of emitted words.

pub mod centralizer;
pub mod diagram;
mod error;
mod par;
pub mod tits;
pub mod verify;
pub mod words;

pub use centralizer::{centralizer_diagram, CentralizerResult};
pub use diagram::{parse_diagram, CoxeterDiagram, Label};
pub use error::{Error, Result};
pub use par::Execution;
pub use words::Word;
