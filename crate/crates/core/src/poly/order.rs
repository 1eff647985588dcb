use std::cmp::Ordering;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use super::table::{Block, VariableTable};

/// Order used inside a single block of a block order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseOrder {
    DegRevLex,
    Lex,
}

/// Monomial orders. Degree-based orders use plain exponent counts, not the
/// table grading.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
    /// Compares the generator block first, then instanton, then parameter,
    /// each with its own base order.
    Block([BaseOrder; 3]),
}

impl MonomialOrder {
    /// Generator block degrevlex, then instanton degrevlex, then parameter
    /// degrevlex: the order quotient algebras are built with.
    pub fn block_degrevlex() -> Self {
        MonomialOrder::Block([BaseOrder::DegRevLex; 3])
    }

    pub fn compare(&self, table: &VariableTable, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => compare_range(BaseOrder::DegRevLex, a, b, 0..a.len()),
            MonomialOrder::Lex => compare_range(BaseOrder::Lex, a, b, 0..a.len()),
            MonomialOrder::Block(orders) => Block::ALL
                .iter()
                .zip(orders)
                .map(|(&block, &base)| compare_range(base, a, b, table.block_range(block)))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal),
        }
    }
}

fn compare_range(base: BaseOrder, a: &Monomial, b: &Monomial, range: Range<usize>) -> Ordering {
    let (a, b) = (&a.exponents()[range.clone()], &b.exponents()[range]);
    match base {
        BaseOrder::Lex => a.cmp(b),
        BaseOrder::DegRevLex => {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            da.cmp(&db).then_with(|| {
                // last differing variable: smaller exponent wins
                a.iter().zip(b).rev().find(|(x, y)| x != y).map_or(Ordering::Equal, |(x, y)| y.cmp(x))
            })
        }
    }
}
