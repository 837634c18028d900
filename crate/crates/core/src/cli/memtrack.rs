//! Process-wide heap accounting through a counting global allocator.
//!
//! A binary opts in with
//!
//! ```ignore
//! #[global_allocator]
//! static ALLOC: adm2::cli::memtrack::CountingAllocator = adm2::cli::memtrack::CountingAllocator;
//! ```
//!
//! Counters are global, so peaks are only attributable to one computation
//! when nothing else allocates concurrently.

use std::alloc::{GlobalAlloc, Layout, System};
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};

static CURRENT: AtomicUsize = AtomicUsize::new(0);
static PEAK: AtomicUsize = AtomicUsize::new(0);
static INSTALLED: AtomicBool = AtomicBool::new(false);

pub struct CountingAllocator;

fn grow(bytes: usize) {
    let now = CURRENT.fetch_add(bytes, Ordering::Relaxed) + bytes;
    PEAK.fetch_max(now, Ordering::Relaxed);
}

fn shrink(bytes: usize) {
    CURRENT.fetch_sub(bytes, Ordering::Relaxed);
}

unsafe impl GlobalAlloc for CountingAllocator {
    unsafe fn alloc(&self, layout: Layout) -> *mut u8 {
        let ptr = System.alloc(layout);
        if !ptr.is_null() {
            grow(layout.size());
        }
        ptr
    }

    unsafe fn alloc_zeroed(&self, layout: Layout) -> *mut u8 {
        let ptr = System.alloc_zeroed(layout);
        if !ptr.is_null() {
            grow(layout.size());
        }
        ptr
    }

    unsafe fn dealloc(&self, ptr: *mut u8, layout: Layout) {
        System.dealloc(ptr, layout);
        shrink(layout.size());
    }

    unsafe fn realloc(&self, ptr: *mut u8, layout: Layout, new_size: usize) -> *mut u8 {
        let new_ptr = System.realloc(ptr, layout, new_size);
        if !new_ptr.is_null() {
            if new_size > layout.size() {
                grow(new_size - layout.size());
            } else {
                shrink(layout.size() - new_size);
            }
        }
        new_ptr
    }
}

/// Records that the counting allocator is the global allocator. Binaries
/// call this at start-up; without it every probe reports as disabled.
pub fn mark_installed() {
    INSTALLED.store(true, Ordering::Relaxed);
}

pub fn is_installed() -> bool {
    INSTALLED.load(Ordering::Relaxed)
}

pub fn current_bytes() -> usize {
    CURRENT.load(Ordering::Relaxed)
}

pub fn peak_bytes() -> usize {
    PEAK.load(Ordering::Relaxed)
}

/// Lowers the recorded peak to the current usage.
pub fn reset_peak() {
    PEAK.store(CURRENT.load(Ordering::Relaxed), Ordering::Relaxed);
}

/// Peak heap growth over a window, measured relative to the usage when the
/// probe started.
#[derive(Debug, Clone, Copy)]
pub struct MemoryProbe {
    enabled: bool,
    baseline: usize,
}

impl MemoryProbe {
    /// Starts a window. With `enabled == false`, or when the counting
    /// allocator is not installed, the probe reports zeros.
    pub fn start(enabled: bool) -> MemoryProbe {
        let enabled = enabled && is_installed();
        if enabled {
            reset_peak();
        }
        MemoryProbe {
            enabled,
            baseline: current_bytes(),
        }
    }

    pub fn enabled(&self) -> bool {
        self.enabled
    }

    /// Peak bytes above the baseline since the probe started.
    pub fn peak_bytes(&self) -> usize {
        if self.enabled {
            peak_bytes().saturating_sub(self.baseline)
        } else {
            0
        }
    }

    pub fn peak_kb(&self) -> f64 {
        self.peak_bytes() as f64 / 1024.0
    }
}
