//! Mode algebras. Matrix relations with series-valued entries are expanded
//! into relations among mode generators; the RTT relations are then oriented
//! into a level-filtered rewrite system.

mod embed;
mod expand;
mod ncpoly;
mod rewrite;

pub use embed::{check_character_modes, check_embedding_images, embedding_image, verify_twisted_embedding};
pub use expand::{expand_relation, expand_relation_with, series_matrix, Normalization, Relation, Series, SeriesMatrix};
pub use ncpoly::{word_level, Family, ModeGen, NCPoly, Word};
pub use rewrite::{derive_rules, export_relations, normal_form, normal_form_with, Reducer, RewriteSystem, Strategy};
