use std::collections::HashMap;
use std::sync::Arc;

/// Named variables with integer weights. Polynomials over the same ring share
/// one `Arc<Ring>`.
#[derive(Debug, PartialEq, Eq)]
pub struct Ring {
    names: Vec<String>,
    weights: Vec<i64>,
    index: HashMap<String, usize>,
}

impl Ring {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = (S, i64)>) -> Arc<Self> {
        let mut names = Vec::new();
        let mut weights = Vec::new();
        let mut index = HashMap::new();
        for (name, weight) in vars {
            let name = name.into();
            assert!(
                index.insert(name.clone(), names.len()).is_none(),
                "duplicate variable {name}"
            );
            names.push(name);
            weights.push(weight);
        }
        Arc::new(Self {
            names,
            weights,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn var(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn name(&self, var: usize) -> &str {
        &self.names[var]
    }

    pub fn weight(&self, var: usize) -> i64 {
        self.weights[var]
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }
}
