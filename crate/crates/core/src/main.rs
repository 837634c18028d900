use std::process::ExitCode;

use adm2::cli::memtrack::{self, CountingAllocator};

#[global_allocator]
static ALLOC: CountingAllocator = CountingAllocator;

fn main() -> ExitCode {
    memtrack::mark_installed();
    adm2::cli::main_with(std::env::args_os())
}
