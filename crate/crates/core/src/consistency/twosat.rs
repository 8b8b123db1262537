//! 2-SAT via the implication graph and Tarjan's strongly connected components.

use super::cnf::{Clause, Cnf2, Lit};

/// Truth value per variable.
pub type Assignment = Vec<bool>;

/// Node `2v` is `¬x_v`, node `2v + 1` is `x_v`.
fn node(l: Lit) -> usize {
    2 * l.var + usize::from(l.positive)
}

/// Solves a 2-CNF over `vars` variables.
///
/// Components are numbered in Tarjan completion order (sinks of the
/// condensation first) with DFS roots taken in node order, and `x_v` is set
/// true iff its component completes before that of `¬x_v`. The result is
/// therefore a fixed function of the clause list.
pub fn solve_clauses(vars: usize, clauses: &[Clause]) -> Option<Assignment> {
    let nodes = 2 * vars;
    let mut adj = vec![Vec::new(); nodes];
    for &(a, b) in clauses {
        // (a ∨ b) ≡ (¬a → b) ∧ (¬b → a)
        adj[node(a.negated())].push(node(b));
        adj[node(b.negated())].push(node(a));
    }
    let comp = tarjan(&adj);
    let mut assignment = Vec::with_capacity(vars);
    for v in 0..vars {
        let (neg, pos) = (comp[2 * v], comp[2 * v + 1]);
        if neg == pos {
            return None;
        }
        assignment.push(pos < neg);
    }
    Some(assignment)
}

pub fn solve_2sat(cnf: &Cnf2) -> Option<Assignment> {
    solve_clauses(cnf.variables().len(), cnf.clauses())
}

/// Iterative Tarjan; returns the component index of every node.
fn tarjan(adj: &[Vec<usize>]) -> Vec<usize> {
    const UNSEEN: usize = usize::MAX;
    let n = adj.len();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSEEN; n];
    let mut stack = Vec::new();
    let mut counter = 0;
    let mut components = 0;
    // frames: (node, next edge position)
    let mut frames: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        frames.push((root, 0));
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&(u, pos)) = frames.last() {
            if pos < adj[u].len() {
                let v = adj[u][pos];
                frames.last_mut().unwrap().1 += 1;
                if index[v] == UNSEEN {
                    index[v] = counter;
                    low[v] = counter;
                    counter += 1;
                    stack.push(v);
                    on_stack[v] = true;
                    frames.push((v, 0));
                } else if on_stack[v] {
                    low[u] = low[u].min(index[v]);
                }
                continue;
            }
            frames.pop();
            if let Some(&(parent, _)) = frames.last() {
                low[parent] = low[parent].min(low[u]);
            }
            if low[u] == index[u] {
                loop {
                    let w = stack.pop().unwrap();
                    on_stack[w] = false;
                    comp[w] = components;
                    if w == u {
                        break;
                    }
                }
                components += 1;
            }
        }
    }
    comp
}
