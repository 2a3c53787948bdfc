pub mod polyq;
pub mod wps;
pub mod singclass;
pub mod dynkin;
pub mod families;
pub mod cli;
