import { Component, Injectable } from '@angular/core';
import { BaseReportPageComponent } from './base-report-page';

@Component({
  selector: 'app-report-page',
  template: `<h1>{{ pageTitle }}</h1>`
})
export class ReportPageComponent extends BaseReportPageComponent {
  pageTitle = 'Report Page';
}
