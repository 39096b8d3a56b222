use super::graph::Graph;
use super::moves::Rule;
use super::property::{FeasibilityChecker, PropertySpec, Variant};
use super::solution::Solution;
use crate::error::{Error, Result};

/// A reachability question: can `source` be transformed into `target`?
///
/// Construction checks that both solutions are well formed, match the
/// variant's representation and are feasible. Their sizes may differ; such
/// instances are trivially NO.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    graph: Graph,
    variant: Variant,
    rule: Rule,
    property: PropertySpec,
    source: Solution,
    target: Solution,
}

impl Instance {
    pub fn new(
        graph: Graph,
        variant: Variant,
        rule: Rule,
        property: PropertySpec,
        source: Solution,
        target: Solution,
    ) -> Result<Instance> {
        let checker = FeasibilityChecker::new(&graph, variant, property)?;
        if !checker.check(&source)? {
            return Err(Error::InfeasibleSource);
        }
        if !checker.check(&target)? {
            return Err(Error::InfeasibleTarget);
        }
        Ok(Instance { graph, variant, rule, property, source, target })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn rule(&self) -> Rule {
        self.rule
    }

    pub fn property(&self) -> PropertySpec {
        self.property
    }

    pub fn source(&self) -> &Solution {
        &self.source
    }

    pub fn target(&self) -> &Solution {
        &self.target
    }

    pub fn checker(&self) -> FeasibilityChecker<'_> {
        FeasibilityChecker::new(&self.graph, self.variant, self.property).expect("property validated at construction")
    }

    /// Same question with a different rule; feasibility does not depend on it.
    pub fn with_rule(&self, rule: Rule) -> Instance {
        Instance { rule, ..self.clone() }
    }

    /// Same graph and setting with new endpoints.
    pub fn with_endpoints(&self, source: Solution, target: Solution) -> Result<Instance> {
        Instance::new(self.graph.clone(), self.variant, self.rule, self.property, source, target)
    }
}
