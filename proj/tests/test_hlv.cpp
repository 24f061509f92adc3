int hlv_placeholder_test_hlv;
