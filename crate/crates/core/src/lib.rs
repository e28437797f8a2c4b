pub mod exactla;
pub mod rootsys;
pub mod gnla;
pub mod freelie;
pub mod prolong;
pub mod parabolic;
pub mod fixtures;
pub mod cli;
