//! Threads and wall clocks for the core search.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use lcf_core::exact::{BranchExecutor, BranchOutcome, Interrupt};

/// Runs branch jobs on `width` scoped threads. Outcomes come back in job
/// order, so results match the serial executor exactly.
pub struct ThreadExecutor {
    pub width: usize,
}

impl BranchExecutor for ThreadExecutor {
    fn run(&self, jobs: usize, job: &(dyn Fn(usize) -> BranchOutcome + Sync)) -> Vec<BranchOutcome> {
        if self.width <= 1 || jobs <= 1 {
            return (0..jobs).map(job).collect();
        }
        let next = AtomicUsize::new(0);
        let slots: Vec<Mutex<Option<BranchOutcome>>> = (0..jobs).map(|_| Mutex::new(None)).collect();
        std::thread::scope(|s| {
            for _ in 0..self.width.min(jobs) {
                s.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= jobs {
                        break;
                    }
                    let out = job(i);
                    *slots[i].lock().unwrap() = Some(out);
                });
            }
        });
        slots.into_iter().map(|m| m.into_inner().unwrap().expect("every job ran")).collect()
    }
}

/// Interrupts once the deadline passes.
pub struct Deadline {
    end: Instant,
}

impl Deadline {
    pub fn after(seconds: u64) -> Self {
        Deadline { end: Instant::now() + Duration::from_secs(seconds) }
    }
}

impl Interrupt for Deadline {
    fn interrupted(&self) -> bool {
        Instant::now() >= self.end
    }
}
