from lambdaquid.data_loading.report_io import dump_json, result_lines, \
                                              report_lines, write_lines, \
                                              load_report
