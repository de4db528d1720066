//! Certificates for general type, the classification rules and the table searches.

pub mod certificate;
pub mod classify;
pub mod fm;
pub mod tables;

pub use classify::{classify, Classification, Step, Verdict};
pub use certificate::{build_certificate, Certificate, CertificateJson, CoordStatus, Coordinate, Grade};
pub use fm::{f_closed, f_general, ingredients, CertificateInput, Ingredients};
pub use tables::{
    nmin_search, reproduce_tables, catalog_choice, stored_table, DiffReport, DiffRow, DiffStatus,
    KnowledgeTable, SearchMode, TableId, TableReport,
};
