use std::collections::{BTreeMap, VecDeque};
use std::sync::{Arc, Condvar, Mutex, MutexGuard};
use std::thread;

use super::{task_key, Lineage, LineageTable};
use crate::cli::render_poly;
use crate::error::{Error, Result};
use crate::poly::{Poly, Ring};
use crate::reduction::{is_unit, normal_form, s_polynomial_unchecked};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TgbOptions {
    pub threads: usize,
    /// Run a single worker over the queue in creation order. Overrides
    /// `threads`.
    pub deterministic: bool,
    pub verbose: bool,
}

impl Default for TgbOptions {
    fn default() -> Self {
        TgbOptions {
            threads: 1,
            deterministic: false,
            verbose: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Completed,
    /// A nonzero constant remainder was found; the ideal is the whole ring.
    UnitFound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunStatus {
    pub outcome: Outcome,
    /// Worker threads actually used.
    pub threads: usize,
    /// Tasks whose reduction ran to completion.
    pub tasks_reduced: usize,
}

/// A scheduled S-pair reduction. The parent values are captured when the
/// task is created.
#[derive(Debug, Clone)]
pub struct Task {
    pub left_lineage: Lineage,
    pub right_lineage: Lineage,
    pub left: Arc<Poly>,
    pub right: Arc<Poly>,
}

impl Task {
    pub fn key(&self) -> String {
        task_key(&self.left_lineage, &self.right_lineage)
    }

    /// Lineage of the remainder this task would add.
    pub fn result_lineage(&self) -> Lineage {
        Lineage::pair(self.left_lineage.clone(), self.right_lineage.clone())
    }
}

#[derive(Debug, Clone)]
pub struct TgbRun {
    pub table: LineageTable,
    pub status: RunStatus,
    /// Verbose trace lines in emission order; empty unless verbose.
    pub trace: Vec<String>,
}

/// Runs the threaded algorithm and collects the verbose trace.
pub fn tgb(gens: &[Poly], ring: &Ring, options: &TgbOptions) -> Result<TgbRun> {
    let trace = Mutex::new(Vec::new());
    let (table, status) = tgb_with_trace(gens, ring, options, |line| {
        trace.lock().unwrap().push(line.to_owned())
    })?;
    Ok(TgbRun {
        table,
        status,
        trace: trace.into_inner().unwrap(),
    })
}

/// Runs the threaded algorithm, passing each verbose trace line to `sink`
/// as it is produced. Lines are emitted while the shared state is locked,
/// so their order matches the order of the events.
pub fn tgb_with_trace<F>(
    gens: &[Poly],
    ring: &Ring,
    options: &TgbOptions,
    sink: F,
) -> Result<(LineageTable, RunStatus)>
where
    F: Fn(&str) + Sync,
{
    if gens.is_empty() {
        return Err(Error::InvalidArgument("no generators".into()));
    }
    if options.threads < 1 {
        return Err(Error::InvalidArgument("thread count must be at least 1".into()));
    }
    normal_form(&Poly::zero(), &gens.iter().filter(|g| !g.is_zero()).collect::<Vec<_>>(), ring)?;

    let threads = if options.deterministic { 1 } else { options.threads };
    let trace = |line: String| {
        if options.verbose {
            sink(&line)
        }
    };

    let mut state = State {
        table: BTreeMap::new(),
        basis: Vec::new(),
        queue: VecDeque::new(),
        active: 0,
        stop: false,
        tasks_reduced: 0,
    };
    for (i, g) in gens.iter().enumerate() {
        let value = (!g.is_zero()).then(|| Arc::new(g.clone()));
        state.basis.extend(value.clone());
        state.table.insert(Lineage::leaf(i), value);
    }
    if gens.iter().any(is_unit) {
        state.stop = true;
    } else {
        let live: Vec<(Lineage, Arc<Poly>)> = state.live().collect();
        for (i, (li, gi)) in live.iter().enumerate() {
            for (lj, gj) in &live[i + 1..] {
                let task = Task {
                    left_lineage: li.clone(),
                    right_lineage: lj.clone(),
                    left: gi.clone(),
                    right: gj.clone(),
                };
                trace(scheduling_line(&task));
                state.queue.push_back(task);
            }
        }
    }

    let shared = Shared {
        state: Mutex::new(state),
        wake: Condvar::new(),
        ring,
        trace: &trace,
    };
    if threads == 1 {
        shared.work();
    } else {
        thread::scope(|s| {
            for _ in 0..threads {
                s.spawn(|| shared.work());
            }
        });
    }

    let state = shared.state.into_inner().unwrap();
    let outcome = if state.stop {
        Outcome::UnitFound
    } else {
        Outcome::Completed
    };
    let entries = state
        .table
        .into_iter()
        .map(|(k, v)| (k, v.map(Arc::unwrap_or_clone)))
        .collect();
    Ok((
        LineageTable::from_parts(ring.clone(), gens.len(), entries),
        RunStatus {
            outcome,
            threads,
            tasks_reduced: state.tasks_reduced,
        },
    ))
}

fn scheduling_line(task: &Task) -> String {
    format!("Scheduling a task for lineage {}", task.result_lineage())
}

struct State {
    table: BTreeMap<Lineage, Option<Arc<Poly>>>,
    /// Non-null elements in insertion order.
    basis: Vec<Arc<Poly>>,
    queue: VecDeque<Task>,
    /// Workers currently reducing a task.
    active: usize,
    /// Set once a unit is found.
    stop: bool,
    tasks_reduced: usize,
}

impl State {
    fn live(&self) -> impl Iterator<Item = (Lineage, Arc<Poly>)> + '_ {
        self.table
            .iter()
            .filter_map(|(k, v)| v.as_ref().map(|p| (k.clone(), p.clone())))
    }
}

struct Shared<'a> {
    state: Mutex<State>,
    wake: Condvar,
    ring: &'a Ring,
    trace: &'a (dyn Fn(String) + Sync),
}

impl Shared<'_> {
    fn lock(&self) -> MutexGuard<'_, State> {
        self.state.lock().unwrap()
    }

    /// Worker loop. Returns when the queue is empty and no worker is busy,
    /// or when a unit has been found.
    fn work(&self) {
        loop {
            let (task, snapshot) = {
                let mut state = self.lock();
                loop {
                    if state.stop {
                        return;
                    }
                    if let Some(task) = state.queue.pop_front() {
                        state.active += 1;
                        let snapshot = state.basis.clone();
                        break (task, snapshot);
                    }
                    if state.active == 0 {
                        self.wake.notify_all();
                        return;
                    }
                    state = self.wake.wait(state).unwrap();
                }
            };

            let s = s_polynomial_unchecked(&task.left, &task.right, self.ring);
            let remainder = crate::reduction::divide(&s, &snapshot, self.ring, None);

            let mut state = self.lock();
            state.active -= 1;
            if !state.stop {
                state.tasks_reduced += 1;
                if !remainder.is_zero() {
                    self.insert(&mut state, task.result_lineage(), remainder);
                }
            }
            drop(state);
            self.wake.notify_all();
        }
    }

    /// Stores a new remainder and queues its S-pairs against every element
    /// present at insertion time, which covers the reduction snapshot and
    /// anything added concurrently since.
    fn insert(&self, state: &mut State, key: Lineage, remainder: Poly) {
        (self.trace)(format!(
            "Adding the following remainder to GB: {} from lineage {}",
            render_poly(&remainder, self.ring),
            key
        ));
        let unit = is_unit(&remainder);
        let value = Arc::new(remainder);
        let previous = state.table.insert(key.clone(), Some(value.clone()));
        state.basis.push(value.clone());
        debug_assert!(previous.is_none(), "lineage {key} produced twice");
        if unit {
            state.stop = true;
            state.queue.clear();
            (self.trace)("Found a unit in the Groebner basis; reducing now.".to_owned());
            return;
        }
        let partners: Vec<(Lineage, Arc<Poly>)> =
            state.live().filter(|(k, _)| *k != key).collect();
        for (lineage, poly) in partners {
            let task = Task {
                left_lineage: key.clone(),
                right_lineage: lineage,
                left: value.clone(),
                right: poly,
            };
            (self.trace)(scheduling_line(&task));
            state.queue.push_back(task);
        }
    }
}
