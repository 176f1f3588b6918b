//! Work budgets for the search solvers.
//!
//! Solvers poll [`Budget::exhausted`] once per search node. The core crate
//! has no clock, so wall-clock deadlines live in the std companion crate.

/// Something a solver can ask "may I keep going?".
pub trait Budget {
    fn exhausted(&mut self) -> bool;
}

/// Never runs out.
#[derive(Clone, Copy, Debug, Default)]
pub struct Unlimited;

impl Budget for Unlimited {
    #[inline]
    fn exhausted(&mut self) -> bool {
        false
    }
}

/// Allows a fixed number of polls.
#[derive(Clone, Copy, Debug)]
pub struct NodeBudget {
    remaining: u64,
}

impl NodeBudget {
    pub fn new(nodes: u64) -> Self {
        NodeBudget { remaining: nodes }
    }

    pub fn remaining(&self) -> u64 {
        self.remaining
    }
}

impl Budget for NodeBudget {
    fn exhausted(&mut self) -> bool {
        if self.remaining == 0 {
            return true;
        }
        self.remaining -= 1;
        false
    }
}

impl<B: Budget + ?Sized> Budget for &mut B {
    fn exhausted(&mut self) -> bool {
        (**self).exhausted()
    }
}

impl<B: Budget + ?Sized> Budget for alloc::boxed::Box<B> {
    fn exhausted(&mut self) -> bool {
        (**self).exhausted()
    }
}
