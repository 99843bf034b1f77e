//! Opaque symbol identifiers with an external name table.

use std::fmt;

/// Index of a basis symbol inside some algebra or symbol table.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SymbolId(pub usize);

impl fmt::Display for SymbolId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Maps symbol ids to display names.
#[derive(Clone, Debug, Default)]
pub struct SymbolTable {
    names: Vec<String>,
}

impl SymbolTable {
    pub fn new() -> SymbolTable {
        SymbolTable { names: Vec::new() }
    }

    pub fn intern(&mut self, name: impl Into<String>) -> SymbolId {
        self.names.push(name.into());
        SymbolId(self.names.len() - 1)
    }

    pub fn name(&self, id: SymbolId) -> &str {
        &self.names[id.0]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}
