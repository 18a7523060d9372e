//! Verification harness: catalog, per-group checks, report writers and the
//! solver self-test.

pub mod catalog;
pub mod report;
pub mod selftest;
pub mod verify;

pub use catalog::{default_catalog, parse_catalog, parse_catalog_line, CatalogEntry, GroupSource};
pub use report::{write_csv, write_json, ReportFormat};
pub use selftest::{solver_selftest, SelftestReport};
pub use verify::{run_verify, verify_group, Budgets, ReportRow, VerificationReport, Verdict};
