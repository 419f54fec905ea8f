use std::sync::atomic::{AtomicUsize, Ordering};
use std::thread;

use naples_core::census::{Enumerator, FamilySpec};
use naples_core::PrefSeq;

/// Splits `[N]^m` by the first car's preference and scans the slices on a
/// pool of scoped threads. Slices are concatenated in preference order, so
/// the result equals the sequential lexicographic listing.
#[derive(Debug, Clone, Copy)]
pub struct Threaded {
    pub threads: usize,
}

impl Enumerator for Threaded {
    fn members(&self, spec: &FamilySpec) -> Vec<PrefSeq> {
        let total = spec.total();
        if self.threads <= 1 || spec.m() == 0 || total <= 1 {
            return spec.members().collect();
        }
        let next = AtomicUsize::new(1);
        let mut slices: Vec<Vec<PrefSeq>> = vec![Vec::new(); total];
        thread::scope(|scope| {
            let workers: Vec<_> = (0..self.threads.min(total))
                .map(|_| {
                    scope.spawn(|| {
                        let mut done = Vec::new();
                        loop {
                            let first = next.fetch_add(1, Ordering::Relaxed);
                            if first > total {
                                return done;
                            }
                            done.push((first, spec.members_with_first(first).collect()));
                        }
                    })
                })
                .collect();
            for worker in workers {
                for (first, slice) in worker.join().expect("enumeration worker panicked") {
                    slices[first - 1] = slice;
                }
            }
        });
        slices.concat()
    }
}
