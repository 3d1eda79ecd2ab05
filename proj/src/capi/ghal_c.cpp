extern "C" int ghal_abi_version(void){return 1;}
