import { Component } from '@angular/core';
import { Report, Api } from './report.model';

@Component({
  selector: 'app-report-detail',
  template: `<p>{{ current?.name }}</p>`
})
export class ReportDetailComponent {
  current: Report | null = null;
  constructor(private api: Api) {}

  meta: Record<string, any> = {};

  report: any;
  reports: any[] = [];

  load(id: any): void {
    this.api.get(id).subscribe((data: any) => { this.current = data; });
  }

}
