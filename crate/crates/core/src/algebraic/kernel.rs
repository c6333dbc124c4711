//! Sweep kernels shared by the public step functions and the driver.
//!
//! Each kernel runs either densely over every unmasked vertex, or over a
//! schedule derived from the live set (unmasked vertices with a nonzero
//! entry). A vertex outside the schedule has a zero entry and only zero
//! neighbors at its turn in the sweep, so skipping it leaves the result
//! identical to the dense sweep.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::arith::Arith;
use crate::graph::Graph;

pub(crate) struct SweepContext<'a> {
    pub graph: &'a Graph,
    /// 0-based index of the vertex carrying `b_i = 1`.
    pub start: usize,
    /// `masked[i]` excludes vertex `i` from reads and writes.
    pub masked: &'a [bool],
    pub signed: bool,
}

/// Generation-stamped membership marks, reusable across sweeps without an
/// O(n) reset.
pub(crate) struct Marks {
    stamp: Vec<u32>,
    epoch: u32,
}

impl Marks {
    pub fn new(n: usize) -> Self {
        Marks {
            stamp: vec![0; n],
            epoch: 0,
        }
    }

    pub fn clear(&mut self) {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.fill(0);
            self.epoch = 1;
        }
    }

    /// Marks `i`; returns false if it was already marked.
    pub fn mark(&mut self, i: usize) -> bool {
        if self.stamp[i] == self.epoch {
            false
        } else {
            self.stamp[i] = self.epoch;
            true
        }
    }
}

fn row_sum<A: Arith>(arith: &A, ctx: &SweepContext<'_>, values: &[A::Value], i: usize) -> A::Value {
    let mut acc = arith.zero();
    for &j in ctx.graph.row(i) {
        let j = j as usize;
        if !ctx.masked[j] {
            arith.add(&mut acc, &values[j]);
        }
    }
    acc
}

/// One Jacobi iteration in place. Returns the indices that were recomputed,
/// ascending.
pub(crate) fn jacobi<A: Arith>(
    arith: &A,
    ctx: &SweepContext<'_>,
    values: &mut [A::Value],
    live: Option<&[u32]>,
    marks: &mut Marks,
) -> Vec<u32> {
    let n = values.len();
    let targets: Vec<u32> = match live {
        None => (0..n as u32).filter(|&i| !ctx.masked[i as usize]).collect(),
        Some(live) => {
            marks.clear();
            let mut t = Vec::with_capacity(live.len() * 2 + 1);
            let mut push = |i: u32, t: &mut Vec<u32>| {
                if !ctx.masked[i as usize] && marks.mark(i as usize) {
                    t.push(i);
                }
            };
            push(ctx.start as u32, &mut t);
            for &i in live {
                push(i, &mut t);
                for &j in ctx.graph.row(i as usize) {
                    push(j, &mut t);
                }
            }
            t.sort_unstable();
            t
        }
    };
    let updated: Vec<A::Value> = targets
        .iter()
        .map(|&i| {
            let i = i as usize;
            let acc = row_sum(arith, ctx, values, i);
            arith.finish(acc, i == ctx.start, ctx.signed)
        })
        .collect();
    for (&i, v) in targets.iter().zip(updated) {
        values[i as usize] = v;
    }
    targets
}

/// One ascending in-place sweep (Gauss-Seidel order): neighbors below `i`
/// contribute their already-updated entries, neighbors above `i` their
/// previous ones. Returns the indices that were recomputed, ascending.
pub(crate) fn ordered<A: Arith>(
    arith: &A,
    ctx: &SweepContext<'_>,
    values: &mut [A::Value],
    live: Option<&[u32]>,
    marks: &mut Marks,
) -> Vec<u32> {
    let n = values.len();
    let Some(live) = live else {
        let mut processed = Vec::with_capacity(n);
        for i in 0..n {
            if ctx.masked[i] {
                continue;
            }
            let acc = row_sum(arith, ctx, values, i);
            values[i] = arith.finish(acc, i == ctx.start, ctx.signed);
            processed.push(i as u32);
        }
        return processed;
    };

    marks.clear();
    let mut queue: BinaryHeap<Reverse<u32>> = BinaryHeap::new();
    let schedule = |i: u32, queue: &mut BinaryHeap<Reverse<u32>>, marks: &mut Marks| {
        if !ctx.masked[i as usize] && marks.mark(i as usize) {
            queue.push(Reverse(i));
        }
    };
    schedule(ctx.start as u32, &mut queue, marks);
    for &i in live {
        schedule(i, &mut queue, marks);
        for &j in ctx.graph.row(i as usize) {
            schedule(j, &mut queue, marks);
        }
    }
    let mut processed = Vec::with_capacity(queue.len());
    while let Some(Reverse(i)) = queue.pop() {
        let iu = i as usize;
        let acc = row_sum(arith, ctx, values, iu);
        values[iu] = arith.finish(acc, iu == ctx.start, ctx.signed);
        if !arith.is_zero(&values[iu]) {
            for &j in ctx.graph.upper(iu) {
                schedule(j, &mut queue, marks);
            }
        }
        processed.push(i);
    }
    processed
}
