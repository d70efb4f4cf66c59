pub mod enumerate;
pub mod formulas;
pub mod table;

pub use enumerate::{count, count_up_to, enumerate, Enumerate};
pub use formulas::{
    binomial, catalan, cc, cigler_count, narayana, scc, symmetric_dyck_peak_count, BigCount,
};
pub use table::CountTable;
