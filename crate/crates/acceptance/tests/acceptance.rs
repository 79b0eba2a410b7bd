use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use laguerre_gft_acceptance::{criteria, dispatch_as_gft};

fn main() -> ExitCode {
    if let Some(code) = dispatch_as_gft() {
        return code;
    }
    let criteria = criteria();
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let elapsed = start.elapsed();
        let result = match result {
            Ok(d) if elapsed > c.budget => Err(format!("{d}; took {elapsed:?}, budget {:?}", c.budget)),
            other => other,
        };
        let (tag, detail) = match &result {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("{tag} criterion {} ({}): {detail} [{elapsed:.2?}]", c.id, c.name);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
