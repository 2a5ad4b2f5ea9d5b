import { Component } from '@angular/core';
import { Report, Api } from './report.model';

@Component({
  selector: 'app-report-detail',
  template: `<p>{{ current?.name }}</p>`
})
export class ReportDetailComponent {
  current: Report | null = null;
  constructor(private api: Api) {}

  meta: Record<string, string> = {};

  report: Report | null = null;
  reports: Report[] = [];

  load(id: number): void {
    this.api.get(id).subscribe((data: Report) => { this.current = data; });
  }

}
