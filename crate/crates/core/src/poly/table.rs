use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Role of a variable. Blocks appear in this order inside a table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Block {
    /// Cohomology generators such as `H`, `psi`, `psit`.
    Generator,
    /// Formal instanton variables `q`, `q1`, `q2`.
    Instanton,
    /// Deformation parameters kept symbolic.
    Parameter,
}

impl Block {
    pub const ALL: [Block; 3] = [Block::Generator, Block::Instanton, Block::Parameter];
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Block::Generator => "generator",
            Block::Instanton => "instanton",
            Block::Parameter => "parameter",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Variable {
    pub name: String,
    pub degree: u32,
    pub block: Block,
}

impl Variable {
    pub fn generator(name: impl Into<String>, degree: u32) -> Self {
        Variable { name: name.into(), degree, block: Block::Generator }
    }

    pub fn instanton(name: impl Into<String>, degree: u32) -> Self {
        Variable { name: name.into(), degree, block: Block::Instanton }
    }

    pub fn parameter(name: impl Into<String>) -> Self {
        Variable { name: name.into(), degree: 0, block: Block::Parameter }
    }
}

/// Ordered list of graded variables shared by every polynomial built over it.
///
/// Names are unique identifiers, blocks are contiguous in the order
/// generator, instanton, parameter, and degrees satisfy generator ≥ 1,
/// instanton ≥ 1, parameter = 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VariableTable {
    vars: Vec<Variable>,
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VariableTable {
    pub fn new(vars: Vec<Variable>) -> Result<Self> {
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(&v.name) {
                return Err(Error::InvalidTable(format!("`{}` is not an identifier", v.name)));
            }
            if vars[..i].iter().any(|w| w.name == v.name) {
                return Err(Error::InvalidTable(format!("duplicate variable `{}`", v.name)));
            }
            if i > 0 && vars[i - 1].block > v.block {
                return Err(Error::InvalidTable(format!(
                    "{} variable `{}` follows a {} variable",
                    v.block,
                    v.name,
                    vars[i - 1].block
                )));
            }
            let degree_ok = match v.block {
                Block::Generator | Block::Instanton => v.degree >= 1,
                Block::Parameter => v.degree == 0,
            };
            if !degree_ok {
                return Err(Error::InvalidTable(format!(
                    "{} variable `{}` cannot have degree {}",
                    v.block, v.name, v.degree
                )));
            }
        }
        Ok(VariableTable { vars })
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    pub fn var(&self, index: usize) -> &Variable {
        &self.vars[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.vars.iter().map(|v| v.name.as_str())
    }

    /// Index range occupied by `block` (possibly empty).
    pub fn block_range(&self, block: Block) -> Range<usize> {
        let start = self.vars.iter().position(|v| v.block >= block).unwrap_or(self.vars.len());
        let end = self.vars.iter().position(|v| v.block > block).unwrap_or(self.vars.len());
        start..end
    }

    /// Appends a parameter-block variable whose name starts with `stem` and
    /// does not clash with an existing one. Returns the new table and the
    /// index of the fresh variable (always the last).
    pub fn with_fresh_parameter(&self, stem: &str) -> (VariableTable, usize) {
        let mut name = stem.to_string();
        while self.index_of(&name).is_some() {
            name.push('_');
        }
        let mut vars = self.vars.clone();
        vars.push(Variable::parameter(name));
        let index = vars.len() - 1;
        (VariableTable { vars }, index)
    }

    /// The table with the variables at `drop` removed.
    pub(crate) fn without(&self, drop: &[usize]) -> VariableTable {
        VariableTable {
            vars: self.vars.iter().enumerate().filter(|(i, _)| !drop.contains(i)).map(|(_, v)| v.clone()).collect(),
        }
    }
}
