//! On-disk cache of basis reports.
//!
//! Layout: `<dir>/t<t>/n<n>/<scope>-<part>.json`, one JSON document per
//! report. Writes go through a temp file plus atomic rename, and the cache
//! directory carries an advisory lock file so concurrent processes sharing a
//! directory do not interleave writes. Loads verify the stored digest and the
//! engine version; anything stale or damaged is treated as a miss.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::report::{BasisReport, Part, Scope};

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, t: u32, n: u64, scope: &Scope, part: Part) -> PathBuf {
        self.dir
            .join(format!("t{t}"))
            .join(format!("n{n}"))
            .join(format!("{}-{}.json", scope.token(), part.token()))
    }

    /// Digest-verified load; stale engine versions and mismatched keys are
    /// misses, not errors.
    pub fn load(&self, t: u32, n: u64, scope: &Scope, part: Part) -> Option<BasisReport> {
        let path = self.path_for(t, n, scope, part);
        let bytes = fs::read(&path).ok()?;
        let report: BasisReport = serde_json::from_slice(&bytes).ok()?;
        let ok = report.t == t
            && report.n == n
            && report.scope == *scope
            && report.part == part
            && report.engine_version == crate::ENGINE_VERSION
            && report.digest_ok();
        ok.then_some(report)
    }

    pub fn store(&self, report: &BasisReport) -> Result<()> {
        let path = self.path_for(report.t, report.n, &report.scope, report.part);
        let parent = path.parent().expect("cache paths have parents");
        fs::create_dir_all(parent)?;
        let _lock = DirLock::acquire(&self.dir)?;
        let tmp = path.with_extension("json.tmp");
        {
            let mut f = fs::File::create(&tmp)?;
            serde_json::to_writer(&mut f, report)
                .map_err(|e| Error::Cache(format!("serialize: {e}")))?;
            f.write_all(b"\n")?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &path)?;
        Ok(())
    }
}

/// Advisory lock on `<dir>/.lock`, released on drop.
struct DirLock {
    #[allow(dead_code)]
    file: fs::File,
}

impl DirLock {
    fn acquire(dir: &Path) -> Result<DirLock> {
        fs::create_dir_all(dir)?;
        let file = fs::OpenOptions::new()
            .create(true)
            .write(true)
            .truncate(false)
            .open(dir.join(".lock"))?;
        #[cfg(unix)]
        {
            use std::os::unix::io::AsRawFd;
            let rc = unsafe { libc::flock(file.as_raw_fd(), libc::LOCK_EX) };
            if rc != 0 {
                return Err(Error::Cache("flock failed".into()));
            }
        }
        Ok(DirLock { file })
    }
}

#[cfg(unix)]
impl Drop for DirLock {
    fn drop(&mut self) {
        use std::os::unix::io::AsRawFd;
        unsafe {
            libc::flock(self.file.as_raw_fd(), libc::LOCK_UN);
        }
    }
}
