//! Exit codes by error class.

use diagrams::DiagramError;
use frobenius::FrobeniusError;
use genfun::GenfunError;
use perm_core::PermError;
use rauzy::RauzyError;
use sampler::SamplerError;
use square_tiled::SquareTiledError;
use volumes::VolumeError;

/// Errors raised by the front end itself.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitClass {
    Success,
    Other,
    Parse,
    Unsupported,
    Budget,
}

impl ExitClass {
    pub fn code(self) -> i32 {
        match self {
            ExitClass::Success => 0,
            ExitClass::Other => 1,
            ExitClass::Parse => 2,
            ExitClass::Unsupported => 3,
            ExitClass::Budget => 4,
        }
    }
}

fn perm(e: &PermError) -> ExitClass {
    match e {
        PermError::Parse { .. } | PermError::Degree { .. } | PermError::Order { .. } => {
            ExitClass::Parse
        }
        _ => ExitClass::Other,
    }
}

fn rauzy(e: &RauzyError) -> ExitClass {
    match e {
        RauzyError::ClassTooLarge(_) => ExitClass::Budget,
        RauzyError::NotFound(_) => ExitClass::Unsupported,
        RauzyError::Parse { .. }
        | RauzyError::Occurrences { .. }
        | RauzyError::Symbols { .. }
        | RauzyError::EmptyRow => ExitClass::Parse,
        _ => ExitClass::Other,
    }
}

fn frobenius(e: &FrobeniusError) -> ExitClass {
    match e {
        FrobeniusError::NotAbelian(_) | FrobeniusError::Genus(_) => ExitClass::Unsupported,
        FrobeniusError::Perm(p) => perm(p),
    }
}

fn volume(e: &VolumeError) -> ExitClass {
    match e {
        VolumeError::Parse { .. } => ExitClass::Parse,
        VolumeError::NotAbelian(_) | VolumeError::NotQuadratic(_) | VolumeError::Genus(_) => {
            ExitClass::Unsupported
        }
        VolumeError::Frobenius(f) => frobenius(f),
        _ => ExitClass::Other,
    }
}

fn square_tiled(e: &SquareTiledError) -> ExitClass {
    match e {
        SquareTiledError::ResourceLimit { .. } => ExitClass::Budget,
        SquareTiledError::NotAbelian(_) => ExitClass::Unsupported,
        SquareTiledError::InsufficientData { .. } => ExitClass::Budget,
        SquareTiledError::Perm(p) => perm(p),
        _ => ExitClass::Other,
    }
}

fn diagram(e: &DiagramError) -> ExitClass {
    match e {
        DiagramError::TooLarge(_) => ExitClass::Budget,
        DiagramError::Volume(v) => volume(v),
        _ => ExitClass::Other,
    }
}

fn sampler(e: &SamplerError) -> ExitClass {
    match e {
        SamplerError::ResourceLimit { .. } => ExitClass::Budget,
        SamplerError::InvalidArgument(_) => ExitClass::Parse,
        SamplerError::NoSurfaces { .. } => ExitClass::Unsupported,
        SamplerError::Rauzy(r) => rauzy(r),
        SamplerError::SquareTiled(s) => square_tiled(s),
        SamplerError::Lengths { .. } => ExitClass::Other,
    }
}

fn genfun(e: &GenfunError) -> ExitClass {
    match e {
        GenfunError::UnsupportedL(_) => ExitClass::Unsupported,
        _ => ExitClass::Parse,
    }
}

fn cli(e: &CliError) -> ExitClass {
    match e {
        CliError::Parse { .. } => ExitClass::Parse,
        CliError::Unsupported(_) => ExitClass::Unsupported,
        CliError::Budget(_) => ExitClass::Budget,
    }
}

/// Class of the first recognised error in the chain.
pub fn classify(err: &anyhow::Error) -> ExitClass {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<CliError>() {
            return cli(e);
        }
        if let Some(e) = cause.downcast_ref::<PermError>() {
            return perm(e);
        }
        if let Some(e) = cause.downcast_ref::<RauzyError>() {
            return rauzy(e);
        }
        if let Some(e) = cause.downcast_ref::<FrobeniusError>() {
            return frobenius(e);
        }
        if let Some(e) = cause.downcast_ref::<VolumeError>() {
            return volume(e);
        }
        if let Some(e) = cause.downcast_ref::<SquareTiledError>() {
            return square_tiled(e);
        }
        if let Some(e) = cause.downcast_ref::<DiagramError>() {
            return diagram(e);
        }
        if let Some(e) = cause.downcast_ref::<SamplerError>() {
            return sampler(e);
        }
        if let Some(e) = cause.downcast_ref::<GenfunError>() {
            return genfun(e);
        }
    }
    ExitClass::Other
}
