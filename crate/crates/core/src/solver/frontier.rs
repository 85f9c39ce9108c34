//! Frontier bookkeeping shared by the two solver variants.

use crate::graph::NodeId;

/// The two boolean arrays driving a solve, plus the round counter and
/// convergence flag.
///
/// SOVM treats `alpha` as the current frontier (exactly the nodes settled in
/// the previous round — never older ones) and `beta` as this round's
/// discoveries; the arrays are swapped, never copied, between rounds. BOVM
/// treats `alpha` as the cumulative reached set and merges `beta` into it
/// after every round. Index lists shadow the boolean arrays so that merging
/// and clearing cost is proportional to the frontier, not to n.
#[derive(Debug)]
pub struct FrontierState {
    alpha: Vec<bool>,
    beta: Vec<bool>,
    alpha_list: Vec<NodeId>,
    beta_list: Vec<NodeId>,
    pub is_converged: bool,
    pub step: u32,
}

impl FrontierState {
    pub fn new(n: usize) -> Self {
        Self {
            alpha: vec![false; n],
            beta: vec![false; n],
            alpha_list: Vec::new(),
            beta_list: Vec::new(),
            is_converged: false,
            step: 0,
        }
    }

    /// Seeds the source into `alpha` before the first round.
    pub fn seed(&mut self, source: NodeId) {
        self.alpha[source as usize] = true;
        self.alpha_list.push(source);
    }

    pub fn alpha(&self) -> &[bool] {
        &self.alpha
    }

    pub fn beta(&self) -> &[bool] {
        &self.beta
    }

    pub fn in_alpha(&self, node: NodeId) -> bool {
        self.alpha[node as usize]
    }

    pub(super) fn frontier_len(&self) -> usize {
        self.alpha_list.len()
    }

    pub(super) fn frontier_node(&self, idx: usize) -> NodeId {
        self.alpha_list[idx]
    }

    /// Marks `node` as discovered this round.
    pub(super) fn record(&mut self, node: NodeId) {
        debug_assert!(!self.beta[node as usize], "node {node} recorded twice in one round");
        self.beta[node as usize] = true;
        self.beta_list.push(node);
    }

    /// SOVM round end: beta becomes the next frontier and the old frontier's
    /// bits are cleared.
    pub(super) fn swap_frontiers(&mut self) {
        std::mem::swap(&mut self.alpha, &mut self.beta);
        std::mem::swap(&mut self.alpha_list, &mut self.beta_list);
        // beta now holds the previous frontier; wipe exactly those bits.
        for i in 0..self.beta_list.len() {
            let node = self.beta_list[i];
            self.beta[node as usize] = false;
        }
        self.beta_list.clear();
    }

    /// BOVM round end: reached set absorbs this round's discoveries and beta
    /// is reset.
    pub(super) fn merge_beta_into_alpha(&mut self) {
        for i in 0..self.beta_list.len() {
            let node = self.beta_list[i];
            self.alpha[node as usize] = true;
            self.beta[node as usize] = false;
        }
        self.beta_list.clear();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swap_moves_beta_to_alpha_and_clears() {
        let mut st = FrontierState::new(4);
        st.seed(0);
        st.record(2);
        st.record(3);
        st.swap_frontiers();
        assert_eq!(st.alpha(), &[false, false, true, true]);
        assert_eq!(st.beta(), &[false, false, false, false]);
        assert_eq!(st.frontier_len(), 2);
    }

    #[test]
    fn merge_accumulates_into_alpha() {
        let mut st = FrontierState::new(3);
        st.seed(0);
        st.record(1);
        st.merge_beta_into_alpha();
        st.record(2);
        st.merge_beta_into_alpha();
        assert_eq!(st.alpha(), &[true, true, true]);
        assert_eq!(st.beta(), &[false, false, false]);
    }
}
