import { Component } from '@angular/core';
import { Patient, Api } from './patient.model';

@Component({
  selector: 'app-patient-detail',
  template: `<p>{{ current?.name }}</p>`
})
export class PatientDetailComponent {
  current: Patient | null = null;
  constructor(private api: Api) {}

  meta: Record<string, any> = {};

  patient: any;
  patients: any[] = [];

  load(id: any): void {
    this.api.get(id).subscribe((data: any) => { this.current = data; });
  }

}
